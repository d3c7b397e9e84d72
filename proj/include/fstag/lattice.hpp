#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fstag/config.hpp"
#include "fstag/lexicon.hpp"
#include "fstag/tokenizer.hpp"
#include "fstag/utf8.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

/// Candidate tags for one token with their costs.
///
/// In order: exact lexicon hits; for capitalized tokens the lowercase hits
/// plus a proper-noun reading at w_proper; for all-caps tokens an acronym
/// reading costlier than any lexical reading present; for punctuation a PUNCT
/// reading at cost 0; and always UNKNOWN at w_unk. A tag appearing twice
/// keeps its cheaper weight.
inline std::vector<Analysis> analyses(const Token& token, const Lexicon& lex, const WeightConfig& cfg) {
  std::vector<Analysis> out;
  auto add = [&out](std::string_view tag, TropicalWeight w) {
    for (auto& a : out)
      if (a.tag == tag) {
        a.weight = plus(a.weight, w);
        return;
      }
    out.push_back(Analysis{std::string(tag), w});
  };

  for (const auto& a : lex.lookup(token.surface)) add(a.tag, a.weight);
  if (token.shape == Shape::capitalized) {
    std::string lower = utf8::to_lower(token.surface);
    if (lower != token.surface)
      for (const auto& a : lex.lookup(lower)) add(a.tag, a.weight);
    add(reserved::kProperNoun, TropicalWeight(cfg.w_proper));
  }
  if (token.shape == Shape::all_caps) {
    double max_lexical = 0.0;
    for (const auto& a : out) max_lexical = std::max(max_lexical, a.weight.value());
    double w = cfg.w_acronym > max_lexical ? cfg.w_acronym : max_lexical + cfg.w_acronym;
    add(reserved::kAcronym, TropicalWeight(w));
  }
  if (token.shape == Shape::punctuation) add(reserved::kPunct, TropicalWeight::one());
  add(reserved::kUnknown, TropicalWeight(cfg.w_unk));
  return out;
}

/// Word symbol table holding the sentence's surfaces in order of first use.
inline std::shared_ptr<SymbolTable> sentence_symbols(const Sentence& sentence) {
  auto syms = std::make_shared<SymbolTable>();
  for (const auto& t : sentence.tokens) syms->add(t.surface);
  return syms;
}

/// Per-sentence lattice: anchor states 0..n, one arc per analysis of token i
/// from anchor i to i+1 (word:tag / weight), final anchor n.
inline StdWfst build_lattice(const Sentence& sentence, const Lexicon& lex, const WeightConfig& cfg,
                             SymbolTablePtr words = nullptr) {
  if (sentence.tokens.empty()) throw std::invalid_argument("empty sentence");
  if (!words) words = sentence_symbols(sentence);
  const auto& tags = lex.tags().symbols();
  StdWfst m(words, tags);
  m.reserve_states(sentence.tokens.size() + 1);
  StateId prev = m.add_state();
  m.set_start(prev);
  for (const auto& tok : sentence.tokens) {
    StateId next = m.add_state();
    Label w = words->id(tok.surface);
    for (const auto& a : analyses(tok, lex, cfg)) m.add_arc(prev, w, tags->id(a.tag), a.weight, next);
    prev = next;
  }
  m.set_final(prev, TropicalWeight::one());
  return m;
}

/// Share of tokens by number of distinct non-UNKNOWN readings.
struct AmbiguityProfile {
  static constexpr std::array<const char*, 6> kBuckets{"0", "1", "2", "3", "4-8", ">8"};
  std::array<std::size_t, 6> counts{};
  std::size_t tokens = 0;

  double fraction(std::size_t bucket) const {
    return tokens ? static_cast<double>(counts[bucket]) / static_cast<double>(tokens) : 0.0;
  }

  static std::size_t bucket_of(std::size_t readings) {
    if (readings <= 3) return readings;
    return readings <= 8 ? 4 : 5;
  }
};

inline AmbiguityProfile ambiguity_profile(const std::vector<Sentence>& corpus, const Lexicon& lex,
                                          const WeightConfig& cfg) {
  AmbiguityProfile p;
  for (const auto& s : corpus)
    for (const auto& t : s.tokens) {
      std::size_t readings = 0;
      for (const auto& a : analyses(t, lex, cfg))
        if (a.tag != reserved::kUnknown) ++readings;
      ++p.counts[AmbiguityProfile::bucket_of(readings)];
      ++p.tokens;
    }
  return p;
}

/// Alphabet-wide morphology machine: a character trie over every surface
/// (char:eps arcs) with one eps:tag arc per lexicon entry into a shared final
/// state. States = 1 + trie nodes + 1, arcs = trie edges + entries.
inline StdWfst lexicon_transducer(const Lexicon& lex) {
  auto chars = std::make_shared<SymbolTable>();
  StdWfst m(chars, lex.tags().symbols());
  StateId root = m.add_state();
  m.set_start(root);
  std::vector<std::pair<std::string, StateId>> ends;
  std::map<std::pair<StateId, Label>, StateId> children;
  for (const auto& surface : lex.surfaces()) {
    StateId s = root;
    for (char32_t c : utf8::decode(surface)) {
      std::string ch;
      utf8::append(ch, c);
      Label l = chars->add(ch);
      auto [it, inserted] = children.try_emplace({s, l}, kNoState);
      if (inserted) {
        it->second = m.add_state();
        m.add_arc(s, l, kEpsilon, TropicalWeight::one(), it->second);
      }
      s = it->second;
    }
    ends.emplace_back(surface, s);
  }
  StateId final_state = m.add_state();
  m.set_final(final_state);
  for (const auto& [surface, s] : ends)
    for (const auto& a : lex.lookup(surface))
      m.add_arc(s, kEpsilon, lex.tags().symbols()->id(a.tag), a.weight, final_state);
  return m;
}

}  // namespace fstag
