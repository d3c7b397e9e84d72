#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fstag/corpus.hpp"
#include "fstag/lexicon.hpp"

namespace fstag::testing {

struct ToyLanguage {
  std::shared_ptr<const TagSet> tags;
  std::shared_ptr<Lexicon> lex;
};

/// One word per genotype, identity tag set over every tag used.
inline ToyLanguage make_language(const std::vector<std::pair<std::string, std::vector<std::string>>>& words) {
  std::vector<std::string> names;
  for (const auto& [_, tags] : words) names.insert(names.end(), tags.begin(), tags.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  ToyLanguage l;
  l.tags = std::make_shared<TagSet>(TagSet::identity(names));
  l.lex = std::make_shared<Lexicon>(l.tags);
  for (const auto& [w, tags] : words)
    for (const auto& t : tags) l.lex->add(w, t);
  return l;
}

/// Words: des [p r], bons [jmp nmp], x [x], grands [nmp], a [a], le [b r],
/// sens [nms], z [n z].
inline ToyLanguage des_bons_language() {
  return make_language({{"des", {"p", "r"}},
                        {"bons", {"jmp", "nmp"}},
                        {"x", {"x"}},
                        {"grands", {"nmp"}},
                        {"a", {"a"}},
                        {"le", {"b", "r"}},
                        {"sens", {"nms"}},
                        {"z", {"n", "z"}}});
}

inline void repeat(TaggedCorpus& corpus, std::size_t times, const std::vector<TaggedToken>& tokens) {
  for (std::size_t i = 0; i < times; ++i) corpus.push_back(GoldSentence{tokens});
}

/// 141 two-word sentences "des bons" split 27/104/2/8 over
/// (p,jmp) (p,nmp) (r,jmp) (r,nmp).
inline TaggedCorpus des_bons_corpus() {
  TaggedCorpus c;
  repeat(c, 27, {{"des", "p"}, {"bons", "jmp"}});
  repeat(c, 104, {{"des", "p"}, {"bons", "nmp"}});
  repeat(c, 2, {{"des", "r"}, {"bons", "jmp"}});
  repeat(c, 8, {{"des", "r"}, {"bons", "nmp"}});
  return c;
}

/// Unigram and bigram rows for [jmp nmp]: two-word sentences put each
/// context right after the boundary, so no other non-boundary context
/// contains the genotype; one-word sentences top up the unigram split to
/// 316 jmp / 291 nmp.
inline TaggedCorpus jmp_nmp_bigram_corpus() {
  TaggedCorpus c;
  repeat(c, 71, {{"bons", "jmp"}, {"x", "x"}});
  repeat(c, 31, {{"bons", "nmp"}, {"x", "x"}});
  repeat(c, 17, {{"bons", "jmp"}, {"des", "p"}});
  repeat(c, 3, {{"bons", "jmp"}, {"des", "r"}});
  repeat(c, 71, {{"bons", "nmp"}, {"des", "p"}});
  repeat(c, 23, {{"bons", "jmp"}, {"grands", "nmp"}});
  repeat(c, 1, {{"bons", "nmp"}, {"grands", "nmp"}});
  repeat(c, 13, {{"bons", "jmp"}, {"a", "a"}});
  repeat(c, 27, {{"des", "p"}, {"bons", "jmp"}});
  repeat(c, 104, {{"des", "p"}, {"bons", "nmp"}});
  repeat(c, 2, {{"des", "r"}, {"bons", "jmp"}});
  repeat(c, 8, {{"des", "r"}, {"bons", "nmp"}});
  repeat(c, 22, {{"le", "r"}, {"bons", "jmp"}});
  repeat(c, 72, {{"le", "r"}, {"bons", "nmp"}});
  repeat(c, 71, {{"grands", "nmp"}, {"bons", "jmp"}});
  repeat(c, 67, {{"bons", "jmp"}});
  repeat(c, 4, {{"bons", "nmp"}});
  return c;
}

/// Trigram rows for [jmp nmp]: left, middle and right attachments.
inline TaggedCorpus jmp_nmp_trigram_corpus() {
  TaggedCorpus c;
  repeat(c, 21, {{"bons", "nmp"}, {"des", "p"}, {"sens", "nms"}});
  repeat(c, 3, {{"bons", "jmp"}, {"bons", "jmp"}, {"x", "x"}});
  repeat(c, 8, {{"bons", "nmp"}, {"bons", "jmp"}, {"x", "x"}});
  repeat(c, 23, {{"des", "p"}, {"bons", "nmp"}, {"des", "p"}});
  repeat(c, 19, {{"le", "r"}, {"bons", "nmp"}, {"des", "p"}});
  repeat(c, 2, {{"le", "r"}, {"bons", "jmp"}, {"des", "p"}});
  repeat(c, 27, {{"des", "p"}, {"grands", "nmp"}, {"bons", "jmp"}});
  repeat(c, 2, {{"des", "r"}, {"grands", "nmp"}, {"bons", "jmp"}});
  repeat(c, 16, {{"z", "z"}, {"des", "p"}, {"bons", "nmp"}});
  repeat(c, 1, {{"z", "z"}, {"des", "r"}, {"bons", "nmp"}});
  return c;
}

}  // namespace fstag::testing
