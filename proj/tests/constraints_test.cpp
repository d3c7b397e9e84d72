#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fstag/constraints.hpp"
#include "fstag/lattice.hpp"
#include "fstag/shortest_path.hpp"
#include "model_oracle.hpp"
#include "oracles.hpp"

namespace fstag {
namespace {

std::vector<ConstraintRule> rules_from(const std::string& text) {
  std::istringstream in(text);
  return parse_rules(in, "test.rules");
}

using testing::count_violations;

double string_weight(const CompiledConstraints& cc, const TagSet& tags, const std::vector<std::string>& s) {
  std::vector<Label> ids;
  for (const auto& t : s) ids.push_back(tags.symbols()->id(t));
  auto chain = linear_acceptor(std::span<const Label>(ids), tags.symbols());
  auto rel = testing::relation_of(compose(chain, cc.transducer));
  EXPECT_EQ(rel.size(), 1u);
  return rel.empty() ? -1.0 : rel.begin()->second;
}

TEST(ParseRules, Syntax) {
  auto rules = rules_from("R V\n# comment\n\nW J V  # trailing\nSB BD\n");
  ASSERT_EQ(rules.size(), 3u);
  EXPECT_EQ(rules[0].pattern, (std::vector<std::string>{"R", "V"}));
  EXPECT_EQ(rules[1].pattern, (std::vector<std::string>{"W", "J", "V"}));
  EXPECT_EQ(rules[1].line, 4u);
  EXPECT_EQ(rules[2].pattern, (std::vector<std::string>{"SB", "BD"}));
}

TEST(ParseRules, Errors) {
  try {
    rules_from("R V\nR\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(rules_from("A B C D\n"), FormatError);
  try {
    rules_from("R SB\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ExpandRule, ReflexivePronounBeforeSecondPersonVerb) {
  std::vector<std::string> names{"BR1P", "BR1S", "BR3S"};
  for (int i = 0; i < 30; ++i) names.push_back("V2X" + std::to_string(i));
  names.push_back("V1S");
  TagSet tags = TagSet::identity(names);
  ConstraintRule rule{{"BR1", "V2"}};
  auto seqs = expand_rule(rule, tags);
  EXPECT_EQ(seqs.size(), 60u);
  EXPECT_EQ(seqs.size(), tags.expand("BR1").size() * tags.expand("V2").size());

  ConstraintRule full{{"BR1P", "V1S"}};
  EXPECT_EQ(expand_rule(full, tags), (std::vector<TagSequence>{{"BR1P", "V1S"}}));

  try {
    expand_rule(ConstraintRule{{"BR1", "Q"}}, tags);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("'Q'"), std::string::npos);
  }
  EXPECT_EQ(expand_rule(ConstraintRule{{"SB", "BR1"}}, tags).size(), 2u);
}

TEST(Compile, EmptyRuleSetIsOneState) {
  TagSet tags = TagSet::identity({"A", "B"});
  auto cc = compile({}, tags, 1000);
  EXPECT_EQ(stats(cc.transducer), (MachineStats{1, tags.full_tags().size()}));
  EXPECT_EQ(tags.full_tags().size(), 6u);  // A, B and four reserved tags
}

TEST(Compile, MatchesHandBuiltMachine) {
  TagSet tags = TagSet::identity({"NMS", "RDM", "V1S"});
  auto cc = compile(rules_from("R V\n"), tags, 1000);
  const auto& syms = tags.symbols();

  // Trie states: root, after RDM, after RDM V1S.
  StdWfst want(syms, syms);
  for (int i = 0; i < 3; ++i) want.add_state();
  want.set_start(0);
  for (StateId s = 0; s < 3; ++s) want.set_final(s);
  std::vector<Label> alphabet;
  for (const auto& t : tags.full_tags()) alphabet.push_back(syms->id(t));
  std::sort(alphabet.begin(), alphabet.end());
  auto rdm = syms->id("RDM"), v1s = syms->id("V1S");
  for (StateId s = 0; s < 3; ++s)
    for (Label l : alphabet) {
      StateId next = 0;
      double w = 0;
      if (l == rdm) next = 1;
      if (l == v1s && s == 1) {
        next = 2;
        w = 1000;
      }
      want.add_arc(s, l, l, TropicalWeight(w), next);
    }
  EXPECT_EQ(stats(cc.transducer), (MachineStats{3, 3 * alphabet.size()}));
  EXPECT_EQ(cc.transducer, want);
}

TEST(Compile, ArticleVerbPenalizedOnce) {
  TagSet tags = TagSet::identity({"NMS", "RDM", "V1S"});
  auto cc = compile(rules_from("R V\n"), tags, 1000);
  EXPECT_EQ(string_weight(cc, tags, {"RDM", "NMS"}), 0.0);
  EXPECT_EQ(string_weight(cc, tags, {"RDM", "V1S"}), 1000.0);
  EXPECT_EQ(string_weight(cc, tags, {"RDM", "V1S", "RDM", "V1S"}), 2000.0);
}

TEST(Compile, PenaltyEqualsViolationCountOnAllShortStrings) {
  TagSet tags = TagSet::identity({"AB", "AC", "BA", "BB", "CA"});
  const std::vector<std::string> alphabet{"AB", "AC", "BA", "BB", "CA", "UNKNOWN"};
  std::mt19937 rng(31);
  const std::vector<std::string> generics{"A", "B", "C", "AB", "BB", "CA", "AC"};
  for (int round = 0; round < 30; ++round) {
    std::vector<ConstraintRule> rules;
    int nrules = 1 + static_cast<int>(rng() % 4);
    for (int r = 0; r < nrules; ++r) {
      ConstraintRule rule;
      if (rng() % 4 == 0) rule.pattern.push_back("SB");
      std::size_t len = rule.pattern.empty() ? 2 + rng() % 2 : 1 + rng() % 2;
      while (rule.pattern.size() < len + (rule.pattern.empty() ? 0 : 1) && rule.pattern.size() < 3)
        rule.pattern.push_back(generics[rng() % generics.size()]);
      if (rule.pattern.size() < 2) rule.pattern.push_back("A");
      rules.push_back(rule);
    }
    auto cc = compile(rules, tags, 1000);
    std::size_t product_sum = 0;
    for (const auto& r : rules) {
      std::size_t p = 1;
      for (const auto& g : r.pattern) p *= g == "SB" ? 1 : tags.expand(g).size();
      EXPECT_EQ(expand_rule(r, tags).size(), p);
      product_sum += p;
    }
    EXPECT_LE(cc.expanded.size(), product_sum);

    for (int k = 0; k < 20; ++k) {
      std::vector<std::string> s(1 + rng() % 5);
      for (auto& t : s) t = alphabet[rng() % alphabet.size()];
      EXPECT_EQ(string_weight(cc, tags, s), 1000.0 * count_violations(cc.expanded, s));
    }
  }
}

class LeManger : public ::testing::Test {
 protected:
  std::shared_ptr<const TagSet> tags = std::make_shared<TagSet>(TagSet::identity({"RDM", "BD3S", "NMS", "VINF"}));
  Lexicon lex{tags};
  WeightConfig cfg;

  void SetUp() override {
    lex.add("le", "RDM");
    lex.add("le", "BD3S");
    lex.add("manger", "NMS");
    lex.add("manger", "VINF");
    lex.add("mange", "VINF");
  }
};

TEST_F(LeManger, TwoReadingsSurvive) {
  auto cc = compile(rules_from("R V\nB N\n"), *tags, cfg.w_neg);
  Sentence s{{make_token("le"), make_token("manger")}};
  auto lattice = build_lattice(s, lex, cfg);
  auto out = apply(cc, lattice);
  const auto& syms = *tags->symbols();
  int tag_paths = 0;
  std::set<std::vector<std::string>> clean;
  for (const auto& p : testing::enumerate_paths(out)) {
    std::vector<std::string> t;
    for (Label l : p.ostring) t.push_back(syms.symbol(l));
    if (std::find(t.begin(), t.end(), "UNKNOWN") != t.end()) continue;
    ++tag_paths;
    if (p.weight < cfg.w_neg) clean.insert(t);
  }
  EXPECT_EQ(tag_paths, 4);
  EXPECT_EQ(clean, (std::set<std::vector<std::string>>{{"RDM", "NMS"}, {"BD3S", "VINF"}}));
}

TEST_F(LeManger, UnknownBeatsViolation) {
  auto cc = compile(rules_from("R V\n"), *tags, cfg.w_neg);
  lex = Lexicon(tags);
  lex.add("le", "RDM");
  lex.add("mange", "VINF");
  Sentence s{{make_token("le"), make_token("mange")}};
  auto best = shortest_path(apply(cc, build_lattice(s, lex, cfg)), 1);
  ASSERT_EQ(best.size(), 1u);
  EXPECT_EQ(best[0].weight.value(), cfg.w_unk);
  std::vector<std::string> t;
  for (Label l : best[0].ostring) t.push_back(tags->symbols()->symbol(l));
  EXPECT_NE(std::find(t.begin(), t.end(), "UNKNOWN"), t.end());
}

TEST_F(LeManger, ApplyIsPenaltyNotFilter) {
  auto cc = compile(rules_from("R V\nB N\nSB B\n"), *tags, cfg.w_neg);
  std::mt19937 rng(3);
  const std::vector<std::string> vocab{"le", "manger", "mange", "zz"};
  const auto& syms = *tags->symbols();
  for (int round = 0; round < 40; ++round) {
    Sentence s;
    for (std::size_t i = 0, n = 1 + rng() % 3; i < n; ++i) s.tokens.push_back(make_token(vocab[rng() % 4]));
    auto lattice = build_lattice(s, lex, cfg);
    auto before = testing::relation_of(lattice);
    auto after = testing::relation_of(apply(cc, lattice));
    ASSERT_EQ(before.size(), after.size());
    for (const auto& [key, w] : before) {
      ASSERT_TRUE(after.count(key));
      std::vector<std::string> t;
      for (Label l : key.second) t.push_back(syms.symbol(l));
      EXPECT_EQ(after.at(key), w + cfg.w_neg * count_violations(cc.expanded, t));
    }
  }
}

TEST_F(LeManger, ViolationFreeLatticeUnchanged) {
  auto cc = compile(rules_from("RDM VINF\n"), *tags, cfg.w_neg);
  Sentence s{{make_token("manger"), make_token("le")}};
  lex = Lexicon(tags);
  lex.add("manger", "NMS");
  lex.add("le", "BD3S");
  auto lattice = build_lattice(s, lex, cfg);
  EXPECT_EQ(testing::relation_of(apply(cc, lattice)), testing::relation_of(lattice));
}

}  // namespace
}  // namespace fstag
