#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <queue>
#include <stdexcept>
#include <vector>

#include "fstag/wfst.hpp"

namespace fstag {

/// A materialized accepting path.
template <Semiring W>
struct Path {
  std::vector<Arc<W>> arcs;
  W weight = W::zero();
  std::vector<Label> istring;  // epsilons removed
  std::vector<Label> ostring;  // epsilons removed
  W final_weight = W::one();
};

/// Distance from every state to a final state (+inf where none is reachable).
/// Requires non-negative weights.
template <PathSemiring W>
std::vector<W> distance_to_final(const Wfst<W>& m) {
  const auto n = static_cast<StateId>(m.num_states());
  std::vector<std::vector<std::pair<StateId, W>>> reverse(n);
  for (StateId s = 0; s < n; ++s)
    for (const auto& a : m.arcs(s)) reverse[a.next].emplace_back(s, a.weight);

  std::vector<W> dist(n, W::zero());
  using Item = std::pair<double, StateId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (StateId s = 0; s < n; ++s)
    if (m.is_final(s)) {
      dist[s] = m.final_weight(s);
      heap.emplace(dist[s].value(), s);
    }
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (d > dist[s].value()) continue;
    for (auto [p, w] : reverse[s]) {
      W cand = times(w, dist[s]);
      if (cand.value() < dist[p].value()) {
        dist[p] = cand;
        heap.emplace(cand.value(), p);
      }
    }
  }
  return dist;
}

/// Up to `n` accepting paths in nondecreasing weight order.
///
/// Best-first search over partial paths keyed by (cost so far + exact
/// distance to final, output labels so far). With an exact heuristic the
/// first completed path is optimal, and among equal-weight paths the one
/// with the lexicographically smallest output-label sequence is returned
/// first. Every cycle must have positive weight; all weights must be
/// non-negative.
template <PathSemiring W>
std::vector<Path<W>> shortest_path(const Wfst<W>& m, std::size_t n = 1) {
  if (n == 0) throw std::invalid_argument("path count must be at least 1");
  std::vector<Path<W>> result;
  if (m.empty()) return result;

  const auto num = static_cast<StateId>(m.num_states());
  for (StateId s = 0; s < num; ++s) {
    for (const auto& a : m.arcs(s))
      if (a.weight.value() < 0) throw std::invalid_argument("negative arc weight");
    if (m.final_weight(s).value() < 0) throw std::invalid_argument("negative final weight");
  }

  const std::vector<W> dist = distance_to_final(m);
  if (dist[m.start()] == W::zero()) return result;

  // Partial paths share prefixes through parent links.
  struct Node {
    std::shared_ptr<const Node> parent;
    Arc<W> arc;
  };
  struct Entry {
    double priority;
    W cost;
    StateId state;
    bool complete;
    std::shared_ptr<const Node> tail;
    std::vector<Label> olabels;
    std::uint64_t seq;
  };
  struct Later {
    bool operator()(const Entry& x, const Entry& y) const {
      if (x.priority != y.priority) return x.priority > y.priority;
      if (x.olabels != y.olabels) return x.olabels > y.olabels;
      return x.seq > y.seq;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> queue;
  std::uint64_t seq = 0;
  queue.push(Entry{dist[m.start()].value(), W::one(), m.start(), false, nullptr, {}, seq++});

  while (!queue.empty() && result.size() < n) {
    Entry e = queue.top();
    queue.pop();

    if (e.complete) {
      Path<W> p;
      for (const Node* node = e.tail.get(); node; node = node->parent.get()) p.arcs.push_back(node->arc);
      std::reverse(p.arcs.begin(), p.arcs.end());
      W total = W::one();
      for (const auto& a : p.arcs) {
        total = times(total, a.weight);
        if (a.ilabel != kEpsilon) p.istring.push_back(a.ilabel);
        if (a.olabel != kEpsilon) p.ostring.push_back(a.olabel);
      }
      p.final_weight = m.final_weight(e.state);
      p.weight = times(total, p.final_weight);
      result.push_back(std::move(p));
      continue;
    }

    if (m.is_final(e.state)) {
      W total = times(e.cost, m.final_weight(e.state));
      queue.push(Entry{total.value(), total, e.state, true, e.tail, e.olabels, seq++});
    }
    for (const auto& a : m.arcs(e.state)) {
      if (dist[a.next] == W::zero() || a.weight == W::zero()) continue;
      W cost = times(e.cost, a.weight);
      auto node = std::make_shared<const Node>(Node{e.tail, a});
      std::vector<Label> olabels = e.olabels;
      if (a.olabel != kEpsilon) olabels.push_back(a.olabel);
      queue.push(Entry{times(cost, dist[a.next]).value(), cost, a.next, false, std::move(node),
                       std::move(olabels), seq++});
    }
  }
  return result;
}

}  // namespace fstag
