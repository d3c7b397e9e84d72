#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fstag/compose.hpp"
#include "fstag/config.hpp"
#include "fstag/constraints.hpp"
#include "fstag/corpus.hpp"
#include "fstag/diagnostics.hpp"
#include "fstag/format.hpp"
#include "fstag/lattice.hpp"
#include "fstag/ngram_model.hpp"
#include "fstag/scoring.hpp"
#include "fstag/shortest_path.hpp"

namespace fstag {

enum class Mode { unigram, bigram, full };

inline constexpr std::array<Mode, 3> kAllModes{Mode::unigram, Mode::bigram, Mode::full};

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::unigram: return "unigram";
    case Mode::bigram: return "bigram";
    default: return "full";
  }
}

inline Mode parse_mode(std::string_view s) {
  if (s == "unigram") return Mode::unigram;
  if (s == "bigram") return Mode::bigram;
  if (s == "full") return Mode::full;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

inline std::size_t max_order(Mode m) { return m == Mode::unigram ? 1 : m == Mode::bigram ? 2 : 3; }
inline bool uses_constraints(Mode m) { return m == Mode::full; }

/// Everything the cascade needs, loaded once and shared read-only.
struct Resources {
  std::shared_ptr<const TagSet> tags;
  std::shared_ptr<const Lexicon> lexicon;
  CompiledConstraints constraints;
  GenotypeModel model;
  WeightConfig cfg;
};

struct ResourcePaths {
  std::string tagset;
  std::string lexicon;
  std::string rules;
  std::string model;
  std::string config;
};

/// Loads whichever resources have a path; the tag set is required. Missing
/// rules give an empty constraint set, a missing model an empty model.
inline Resources load_resources(const ResourcePaths& p) {
  Resources r;
  if (!p.config.empty()) r.cfg = load_config(p.config);
  r.cfg.validate();
  r.tags = std::make_shared<TagSet>(load_tagset(p.tagset));
  r.lexicon = std::make_shared<Lexicon>(p.lexicon.empty() ? Lexicon(r.tags) : load_lexicon(p.lexicon, r.tags));
  std::vector<ConstraintRule> rules;
  if (!p.rules.empty()) rules = load_rules(p.rules);
  try {
    r.constraints = compile(rules, *r.tags, r.cfg.w_neg);
  } catch (const std::invalid_argument& e) {
    throw FormatError(p.rules, 0, e.what());
  }
  if (!p.model.empty()) r.model = load_model(p.model);
  return r;
}

struct TaggedWord {
  std::string surface;
  std::string tag;
  double cost = 0.0;
};

struct TaggedSentence {
  std::vector<TaggedWord> tokens;
  double total_cost = 0.0;
};

/// Genotypes of a sentence in the model's tag space.
inline std::vector<Genotype> sentence_genotypes(const Sentence& s, const Resources& r) {
  std::vector<Genotype> g;
  g.reserve(s.tokens.size());
  for (const auto& t : s.tokens) g.push_back(genotype_of(t, *r.lexicon, r.cfg, r.model.space()));
  return g;
}

/// Lattice, then constraints (full mode), then collapse to the model's tag
/// space, then the n-gram scorer. Every stage is a composition.
inline StdWfst cascade(const Sentence& s, const Resources& r, Mode mode) {
  StdWfst m = build_lattice(s, *r.lexicon, r.cfg);
  if (uses_constraints(mode)) m = apply(r.constraints, m);
  if (r.model.space() == TagSpace::collapsed) m = compose(m, r.tags->collapse_transducer());
  return compose(m, score_transducer(r.model, sentence_genotypes(s, r), r.tags->symbols(), max_order(mode)));
}

/// Cheapest tagging; tags are in the model's tag space. Ties go to the
/// smallest tag-id sequence.
inline TaggedSentence tag_sentence(const Sentence& s, const Resources& r, Mode mode) {
  if (s.tokens.empty()) return {};
  auto best = shortest_path(cascade(s, r, mode), 1);
  if (best.empty()) throw std::logic_error("no accepting path");
  const auto& p = best.front();
  if (p.arcs.size() != s.tokens.size()) throw std::logic_error("path length differs from sentence length");
  TaggedSentence out;
  const auto& syms = *r.tags->symbols();
  for (std::size_t i = 0; i < p.arcs.size(); ++i)
    out.tokens.push_back({s.tokens[i].surface, syms.symbol(p.arcs[i].olabel), p.arcs[i].weight.value()});
  out.total_cost = p.weight.value();
  return out;
}

struct ModeAccuracy {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  std::uint64_t correct_with_punct = 0;
  std::uint64_t total_with_punct = 0;

  double accuracy(bool with_punct = false) const {
    auto t = with_punct ? total_with_punct : total;
    auto c = with_punct ? correct_with_punct : correct;
    return t ? static_cast<double>(c) / static_cast<double>(t) : 0.0;
  }
};

struct EvalReport {
  std::array<ModeAccuracy, 3> modes;
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
  std::uint64_t punctuation = 0;
  /// (gold, predicted) -> count over full-mode errors on counted tokens.
  std::map<std::pair<std::string, std::string>, std::uint64_t> confusion;

  const ModeAccuracy& mode(Mode m) const { return modes[static_cast<std::size_t>(m)]; }
};

inline bool is_punctuation_token(const TaggedToken& t) {
  return t.tag == reserved::kPunct || shape_of(t.surface) == Shape::punctuation;
}

/// Tags the gold corpus in every mode. Gold tags are compared in the model's
/// tag space.
inline EvalReport evaluate(const TaggedCorpus& gold, const Resources& r) {
  EvalReport rep;
  for (const auto& gs : gold) {
    if (gs.tokens.empty()) continue;
    ++rep.sentences;
    Sentence s = to_sentence(gs);
    std::vector<std::string> want;
    std::vector<bool> punct;
    for (const auto& t : gs.tokens) {
      want.push_back(r.tags->to_space(t.tag, r.model.space()));
      punct.push_back(is_punctuation_token(t));
      ++rep.tokens;
      if (punct.back()) ++rep.punctuation;
    }
    for (Mode m : kAllModes) {
      auto got = tag_sentence(s, r, m);
      auto& acc = rep.modes[static_cast<std::size_t>(m)];
      for (std::size_t i = 0; i < want.size(); ++i) {
        bool ok = got.tokens[i].tag == want[i];
        ++acc.total_with_punct;
        acc.correct_with_punct += ok;
        if (punct[i]) continue;
        ++acc.total;
        acc.correct += ok;
        if (!ok && m == Mode::full) ++rep.confusion[{want[i], got.tokens[i].tag}];
      }
    }
  }
  return rep;
}

inline std::string render_eval(const EvalReport& rep, const std::string& name, bool with_punct = false,
                               std::size_t top_errors = 10) {
  std::vector<std::vector<std::string>> rows{{"", "1-grams", "1, 2 -grams", "neg. cons and 1, 2, 3 -grams"}};
  auto row = [&](const std::string& label, bool punct) {
    std::vector<std::string> r{label};
    for (Mode m : kAllModes) r.push_back(fixed(100.0 * rep.mode(m).accuracy(punct), 1) + "%");
    rows.push_back(std::move(r));
  };
  const auto& full = rep.mode(Mode::full);
  row(name + " (" + std::to_string(full.total) + " words)", false);
  if (with_punct) row(name + " with punctuation (" + std::to_string(full.total_with_punct) + " tokens)", true);
  std::string out = render_table(rows);

  if (!rep.confusion.empty() && top_errors > 0) {
    std::vector<std::pair<std::uint64_t, std::pair<std::string, std::string>>> errs;
    for (const auto& [k, v] : rep.confusion) errs.emplace_back(v, k);
    std::stable_sort(errs.begin(), errs.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<std::vector<std::string>> conf{{"gold", "tagged", "count"}};
    for (std::size_t i = 0; i < errs.size() && i < top_errors; ++i)
      conf.push_back({errs[i].second.first, errs[i].second.second, std::to_string(errs[i].first)});
    out += "\nmost frequent full-mode errors:\n" + render_table(conf);
  }
  return out;
}

struct InspectReport {
  MachineStats morphology;
  MachineStats constraints;
  MachineStats ngrams;
};

/// Sizes of the three resource machines. The n-gram machine is counted as
/// one root plus one state per genotype context and one arc per tagging.
inline InspectReport inspect(const Resources& r) {
  InspectReport rep;
  rep.morphology = stats(lexicon_transducer(*r.lexicon));
  rep.constraints = stats(r.constraints.transducer);
  rep.ngrams = {1, 0};
  for (std::size_t n = 1; n <= 3; ++n) {
    rep.ngrams.states += r.model.table(n).num_contexts();
    rep.ngrams.arcs += r.model.table(n).num_entries();
  }
  return rep;
}

inline std::string render_inspect(const InspectReport& rep) {
  return render_table({{"", "Morphology", "Negative constraints", "Ngram genotypes"},
                       {"Number of states", std::to_string(rep.morphology.states),
                        std::to_string(rep.constraints.states), std::to_string(rep.ngrams.states)},
                       {"Number of arcs", std::to_string(rep.morphology.arcs), std::to_string(rep.constraints.arcs),
                        std::to_string(rep.ngrams.arcs)}});
}

inline void write_tagged(std::ostream& out, const TaggedSentence& s, bool show_cost) {
  for (const auto& t : s.tokens) {
    out << t.surface << '\t' << t.tag;
    if (show_cost) out << '\t' << fixed(t.cost, 4);
    out << '\n';
  }
}

}  // namespace fstag
