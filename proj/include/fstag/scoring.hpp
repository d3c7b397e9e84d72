#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fstag/ngram_model.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

struct BackoffWeight {
  TropicalWeight weight;
  /// Table that supplied the weight; 0 for the uniform fallback.
  std::size_t order = 0;
};

/// Cost of `tag` at padded position j (j >= 1; position 0 is [SB]) given the
/// two previous tags. Uses the highest order <= max_order whose context was
/// seen with this history: -ln(f(history, tag) / f(history)), or
/// ln(f(history) + 1) when the tag never followed that history. With no
/// usable table the cost is ln|G| for members of G and ln(|G| + 1) otherwise.
inline BackoffWeight backoff_weight(const GenotypeModel& model, const Context& padded, std::size_t j,
                                    const std::string& prev2, const std::string& prev1, const std::string& tag,
                                    std::size_t max_order = 3) {
  if (j == 0 || j >= padded.size()) throw std::out_of_range("position outside the sentence");
  for (std::size_t n = std::min<std::size_t>(max_order, 3); n >= 1; --n) {
    if (n > j + 1) continue;
    Context ctx(padded.begin() + static_cast<std::ptrdiff_t>(j + 1 - n), padded.begin() + static_cast<std::ptrdiff_t>(j + 1));
    Tagging t;
    if (n == 3) t.push_back(prev2);
    if (n >= 2) t.push_back(prev1);
    const auto& table = model.table(n);
    std::uint64_t f_hist = table.prefix_total(ctx, t);
    if (f_hist == 0) continue;
    t.push_back(tag);
    std::uint64_t f = table.count(ctx, t);
    double w = f ? -std::log(static_cast<double>(f) / static_cast<double>(f_hist))
                 : std::log(static_cast<double>(f_hist) + 1.0);
    return {TropicalWeight(w), n};
  }
  const Genotype& g = padded[j];
  double size = static_cast<double>(g.size()) + (g.contains(tag) ? 0.0 : 1.0);
  return {TropicalWeight(std::log(size)), 0};
}

/// Left-padded context [SB] G0 G1 ... of a sentence's genotypes.
inline Context padded_context(const std::vector<Genotype>& genotypes) {
  Context padded{Genotype::boundary()};
  padded.insert(padded.end(), genotypes.begin(), genotypes.end());
  return padded;
}

/// Acyclic tag:tag transducer scoring every tag sequence with one candidate
/// from G_i plus UNKNOWN per position. States carry the tag history the
/// chosen order needs, so a path's weight is the sum of its backoff weights.
inline StdWfst score_transducer(const GenotypeModel& model, const std::vector<Genotype>& genotypes,
                                const SymbolTablePtr& tags, std::size_t max_order = 3) {
  if (genotypes.empty()) throw std::invalid_argument("no genotypes to score");
  const Context padded = padded_context(genotypes);
  const std::string sb(reserved::kSentenceBegin);
  using History = std::pair<std::string, std::string>;

  StdWfst m(tags, tags);
  std::map<History, StateId> layer;
  StateId start = m.add_state();
  m.set_start(start);
  layer.emplace(History{"", sb}, start);

  auto key = [max_order](History h) {
    if (max_order < 3) h.first.clear();
    if (max_order < 2) h.second.clear();
    return h;
  };

  for (std::size_t j = 1; j < padded.size(); ++j) {
    std::vector<std::pair<Label, std::string>> candidates;
    for (const auto& t : padded[j].tags()) candidates.emplace_back(tags->id(t), t);
    if (!padded[j].contains(reserved::kUnknown))
      candidates.emplace_back(tags->id(reserved::kUnknown), std::string(reserved::kUnknown));
    std::sort(candidates.begin(), candidates.end());

    std::map<History, StateId> next_layer;
    for (const auto& [hist, src] : layer) {
      for (const auto& [label, tag] : candidates) {
        auto bw = backoff_weight(model, padded, j, hist.first, hist.second, tag, max_order);
        History nh = key({hist.second, tag});
        auto [it, inserted] = next_layer.try_emplace(nh, kNoState);
        if (inserted) it->second = m.add_state();
        m.add_arc(src, label, label, bw.weight, it->second);
      }
    }
    layer = std::move(next_layer);
  }
  for (const auto& [_, s] : layer) m.set_final(s);
  return m;
}

}  // namespace fstag
