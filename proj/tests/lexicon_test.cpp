#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fstag/compose.hpp"
#include "fstag/lattice.hpp"
#include "oracles.hpp"

namespace fstag {
namespace {

std::shared_ptr<const TagSet> french_tags() {
  return std::make_shared<TagSet>(std::vector<std::pair<std::string, std::string>>{
      {"RDM", "RDM"}, {"BD3S", "BD3S"}, {"NMS", "NMS"}, {"PPMS", "PP"}, {"V3S", "V3S"}, {"JS", "JXS"},
      {"V1S", "V1S"}, {"V2S", "V2S"}, {"PP", "PP"}, {"NFS", "NFS"}});
}

Lexicon lexicon_from(const std::string& text, std::shared_ptr<const TagSet> tags = french_tags()) {
  std::istringstream in(text);
  return parse_lexicon(in, "test.lex", std::move(tags));
}

const char* kTable1 =
    "le\tRDM\t0\nle\tBD3S\t0\n"
    "produit\tNMS\nproduit\tPPMS\nproduit\tV3S\n"
    "liquide\tJS\nliquide\tNMS\nliquide\tV1S\nliquide\tV2S\nliquide\tV3S\n"
    "marché\tNMS\nmarché\tPP\n";

Sentence sentence_of(std::initializer_list<const char*> words) {
  Sentence s;
  for (const char* w : words) s.tokens.push_back(make_token(w));
  return s;
}

TEST(LoadLexicon, LeHasArticleAndPronoun) {
  auto lex = lexicon_from("le\tRDM\t0\nle\tBD3S\t0\n");
  auto hits = lex.lookup("le");
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0], (Analysis{"BD3S", TropicalWeight(0)}));
  EXPECT_EQ(hits[1], (Analysis{"RDM", TropicalWeight(0)}));
}

TEST(LoadLexicon, EmptyFileAndDuplicates) {
  EXPECT_EQ(lexicon_from("").num_entries(), 0u);
  auto lex = lexicon_from("x\tNMS\t1\nx\tNMS\t2\n");
  ASSERT_EQ(lex.lookup("x").size(), 1u);
  EXPECT_EQ(lex.lookup("x")[0].weight, TropicalWeight(1));
}

TEST(LoadLexicon, ErrorsCarryLineAndTag) {
  try {
    lexicon_from("le\tRDM\nbad line without tab\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    lexicon_from("le\tRDM\nchat\tXYZ\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("XYZ"), std::string::npos);
  }
  EXPECT_THROW(lexicon_from("le\tRDM\tabc\n"), FormatError);
}

TEST(LoadLexicon, FromFile) {
  auto path = std::filesystem::temp_directory_path() / "fstag_lexicon_test.lex";
  {
    std::ofstream out(path);
    out << "parce que\tPP\n";
  }
  auto lex = load_lexicon(path.string(), french_tags());
  EXPECT_EQ(lex.lookup("parce_que").size(), 1u);
  std::filesystem::remove(path);
  EXPECT_THROW(load_lexicon("/nonexistent/x.lex", french_tags()), FormatError);
}

TEST(TagSetTest, ReservedTagsAndCollapse) {
  auto tags = french_tags();
  for (auto r : {"UNKNOWN", "NPR", "ACR", "PUNCT"}) {
    EXPECT_TRUE(tags->is_full(r));
    EXPECT_EQ(tags->collapse(r), r);
  }
  EXPECT_EQ(tags->collapse("JS"), "JXS");
  EXPECT_EQ(tags->to_space("JS", TagSpace::collapsed), "JXS");
  EXPECT_EQ(tags->to_space("JXS", TagSpace::collapsed), "JXS");
  EXPECT_EQ(tags->expand("V"), (std::vector<std::string>{"V1S", "V2S", "V3S"}));
  EXPECT_EQ(tags->expand("U"), std::vector<std::string>{});
  EXPECT_THROW(TagSet::identity({"SB"}), std::invalid_argument);
  EXPECT_THROW(TagSet({{"A", "B"}, {"A", "C"}}), std::invalid_argument);

  std::istringstream in("# comment\nRDM\tR\nNMS NMS\nV3S\n");
  auto parsed = parse_tagset(in, "t");
  EXPECT_EQ(parsed.collapse("RDM"), "R");
  EXPECT_EQ(parsed.collapse("V3S"), "V3S");
  std::istringstream bad("A B C\n");
  EXPECT_THROW(parse_tagset(bad, "t"), FormatError);
}

TEST(Analyses, CapitalizedPrefersCommonNoun) {
  auto lex = lexicon_from(kTable1);
  WeightConfig cfg;
  auto got = analyses(make_token("Marché"), lex, cfg);
  std::vector<Analysis> want{{"NMS", TropicalWeight(0)},
                             {"PP", TropicalWeight(0)},
                             {"NPR", TropicalWeight(cfg.w_proper)},
                             {"UNKNOWN", TropicalWeight(cfg.w_unk)}};
  EXPECT_EQ(got, want);
  EXPECT_LT(got[0].weight, got[2].weight);
}

TEST(Analyses, UnknownWordAndAcronym) {
  auto lex = lexicon_from(kTable1);
  WeightConfig cfg;
  EXPECT_EQ(analyses(make_token("zzz"), lex, cfg),
            (std::vector<Analysis>{{"UNKNOWN", TropicalWeight(cfg.w_unk)}}));
  auto onu = analyses(make_token("ONU"), lex, cfg);
  ASSERT_EQ(onu.size(), 2u);
  EXPECT_EQ(onu[0].tag, "ACR");
  EXPECT_EQ(onu[1].tag, "UNKNOWN");
  EXPECT_LT(onu[0].weight, onu[1].weight);
}

TEST(Analyses, AcronymCostsMoreThanLexicalReading) {
  auto lex = lexicon_from("LE\tRDM\t7\n");
  WeightConfig cfg;
  auto got = analyses(make_token("LE"), lex, cfg);
  ASSERT_EQ(got.size(), 3u);
  EXPECT_EQ(got[1].tag, "ACR");
  EXPECT_GT(got[1].weight, got[0].weight);
  EXPECT_LT(got[1].weight, got[2].weight);
}

TEST(Analyses, AlwaysContainsUnknownAndRespectsOrdering) {
  auto lex = lexicon_from(kTable1);
  WeightConfig cfg;
  for (const char* w : {"le", "Le", "LE", "produit", ".", "Marché", "MARCHÉ", "x", "3,5"}) {
    auto got = analyses(make_token(w), lex, cfg);
    ASSERT_FALSE(got.empty());
    EXPECT_EQ(got.back(), (Analysis{"UNKNOWN", TropicalWeight(cfg.w_unk)}));
    for (const auto& a : got) {
      if (a.tag == "NPR") {
        EXPECT_EQ(a.weight.value(), cfg.w_proper);
      }
      if (a.tag == "ACR") {
        EXPECT_EQ(a.weight.value(), cfg.w_acronym);
      }
      if (a.tag != "UNKNOWN") {
        EXPECT_LT(a.weight.value(), cfg.w_unk);
      }
    }
  }
  EXPECT_LT(0.0, cfg.w_proper);
  EXPECT_LT(cfg.w_acronym, cfg.w_unk);
  EXPECT_LT(cfg.w_unk, cfg.w_neg);
}

TEST(BuildLattice, CrossProductOfTable1Readings) {
  auto lex = lexicon_from(kTable1);
  WeightConfig cfg;
  auto s = sentence_of({"le", "produit", "liquide"});
  auto lattice = build_lattice(s, lex, cfg);
  EXPECT_EQ(stats(lattice), (MachineStats{4, 3 + 4 + 6}));
  auto paths = testing::enumerate_paths(lattice);
  EXPECT_EQ(paths.size(), 3u * 4u * 6u);
  auto unk = lex.tags().symbols()->id("UNKNOWN");
  for (StateId q = 0; q < 3; ++q)
    for (const auto& a : lattice.arcs(q)) EXPECT_EQ(a.weight.value(), a.olabel == unk ? cfg.w_unk : 0.0);

  // The input string composed with the lattice gives the lattice back.
  std::vector<std::string> words{"le", "produit", "liquide"};
  auto chain = linear_acceptor(std::span<const std::string>(words),
                               std::const_pointer_cast<SymbolTable>(lattice.input_symbols()));
  EXPECT_EQ(testing::relation_of(compose(chain, lattice)), testing::relation_of(lattice));
}

TEST(BuildLattice, PathCounts) {
  auto tags = std::make_shared<TagSet>(TagSet::identity({"A", "B", "C", "D", "E", "F"}));
  auto lex = lexicon_from("x\tA\nx\tB\ny\tC\nz\tD\nz\tE\nz\tF\n", tags);
  WeightConfig cfg;
  EXPECT_EQ(testing::enumerate_paths(build_lattice(sentence_of({"y"}), lex, cfg)).size(), 2u);
  EXPECT_EQ(testing::enumerate_paths(build_lattice(sentence_of({"x", "y", "z"}), lex, cfg)).size(), 24u);
  EXPECT_THROW(build_lattice(Sentence{}, lex, cfg), std::invalid_argument);
}

TEST(BuildLattice, PathWeightIsSumOfAnalysisWeights) {
  auto tags = std::make_shared<TagSet>(TagSet::identity({"A", "B", "C"}));
  auto lex = lexicon_from("a\tA\t1\na\tB\t2\nb\tC\t0.5\nB\tA\t3\nc\tB\t0\nc\tC\t1.25\n", tags);
  WeightConfig cfg;
  const std::vector<std::string> vocab{"a", "b", "c", "B", "Cc", "AB", "q"};
  std::mt19937 rng(2);
  for (int round = 0; round < 50; ++round) {
    Sentence s;
    int n = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n; ++i) s.tokens.push_back(make_token(vocab[rng() % vocab.size()]));
    auto lattice = build_lattice(s, lex, cfg);
    const auto& syms = *lattice.output_symbols();
    // Independent total: sum per-token analysis weights for the path's tags.
    for (const auto& p : testing::enumerate_paths(lattice)) {
      double want = 0.0;
      for (std::size_t i = 0; i < p.ostring.size(); ++i)
        for (const auto& a : analyses(s.tokens[i], lex, cfg))
          if (a.tag == syms.symbol(p.ostring[i])) want += a.weight.value();
      EXPECT_DOUBLE_EQ(p.weight, want);
      for (Label l : p.ostring) EXPECT_TRUE(lex.tags().is_short(lex.tags().collapse(syms.symbol(l))));
    }
  }
}

TEST(AmbiguityProfileTest, HandBuiltCorpus) {
  auto tags = std::make_shared<TagSet>(TagSet::identity({"A", "B", "C"}));
  auto lex = lexicon_from("u\tA\nd\tA\nd\tB\nt\tA\nt\tB\nt\tC\n", tags);
  WeightConfig cfg;
  Sentence s = sentence_of({"u", "u", "u", "u", "u", "d", "d", "d", "t", "t"});
  auto p = ambiguity_profile({s}, lex, cfg);
  EXPECT_EQ(p.tokens, 10u);
  EXPECT_DOUBLE_EQ(p.fraction(1), 0.5);
  EXPECT_DOUBLE_EQ(p.fraction(2), 0.3);
  EXPECT_DOUBLE_EQ(p.fraction(3), 0.2);
  EXPECT_DOUBLE_EQ(p.fraction(0), 0.0);

  auto all_one = ambiguity_profile({sentence_of({"u", "u"})}, lex, cfg);
  EXPECT_DOUBLE_EQ(all_one.fraction(1), 1.0);
  EXPECT_EQ(AmbiguityProfile::bucket_of(8), 4u);
  EXPECT_EQ(AmbiguityProfile::bucket_of(9), 5u);
}

TEST(LexiconTransducer, HandCountedSize) {
  auto tags = std::make_shared<TagSet>(TagSet::identity({"A", "B"}));
  // Trie over "le", "la", "l": nodes l, le, la -> 3 nodes; 4 entries.
  auto lex = lexicon_from("le\tA\nle\tB\nla\tA\nl\tB\n", tags);
  auto m = lexicon_transducer(lex);
  EXPECT_EQ(stats(m), (MachineStats{1 + 3 + 1, 3 + 4}));
}

}  // namespace
}  // namespace fstag
