#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fstag/trim.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

namespace detail {

// Per-state arc indices of the right operand, sorted by input label, built on
// first visit.
template <Semiring W>
class InputLabelIndex {
 public:
  explicit InputLabelIndex(const Wfst<W>& m) : m_(m), sorted_(m.num_states()), built_(m.num_states(), 0) {}

  // Arcs of `s` with input label `l`, as a [first, last) range of indices.
  std::pair<const std::uint32_t*, const std::uint32_t*> find(StateId s, Label l) {
    const auto& idx = get(s);
    auto arcs = m_.arcs(s);
    auto lo = std::lower_bound(idx.begin(), idx.end(), l,
                               [&](std::uint32_t i, Label v) { return arcs[i].ilabel < v; });
    auto hi = std::upper_bound(lo, idx.end(), l,
                               [&](Label v, std::uint32_t i) { return v < arcs[i].ilabel; });
    return {idx.data() + (lo - idx.begin()), idx.data() + (hi - idx.begin())};
  }

 private:
  const std::vector<std::uint32_t>& get(StateId s) {
    if (!built_[s]) {
      auto arcs = m_.arcs(s);
      auto& v = sorted_[s];
      v.resize(arcs.size());
      for (std::uint32_t i = 0; i < v.size(); ++i) v[i] = i;
      std::stable_sort(v.begin(), v.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return arcs[a].ilabel < arcs[b].ilabel; });
      built_[s] = 1;
    }
    return sorted_[s];
  }

  const Wfst<W>& m_;
  std::vector<std::vector<std::uint32_t>> sorted_;
  std::vector<char> built_;
};

struct ComposeTriple {
  StateId left;
  StateId right;
  std::uint8_t filter;

  friend bool operator==(const ComposeTriple&, const ComposeTriple&) = default;
};

struct ComposeTripleHash {
  std::size_t operator()(const ComposeTriple& t) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(t.left);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(t.right);
    h = h * 0x9E3779B97F4A7C15ULL ^ t.filter;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace detail

/// Relational composition of `a` followed by `b`, trimmed.
///
/// Epsilons are coordinated with a sequence filter: inside one run of
/// epsilon moves, all moves of `a` on output-epsilon arcs come before any
/// move of `b` on input-epsilon arcs, and an epsilon in `a` never pairs with
/// an epsilon in `b`. Each pair of matching paths therefore yields exactly
/// one path in the result.
template <Semiring W>
Wfst<W> compose(const Wfst<W>& a, const Wfst<W>& b) {
  if (a.output_symbols() != b.input_symbols() && !(*a.output_symbols() == *b.input_symbols()))
    throw std::invalid_argument("alphabet mismatch");

  Wfst<W> out(a.input_symbols(), b.output_symbols());
  if (a.empty() || b.empty()) return out;

  using detail::ComposeTriple;
  // Filter state 0: either side may move alone on epsilon.
  // Filter state 1: `b` has moved alone; `a` must wait for a real match.
  std::unordered_map<ComposeTriple, StateId, detail::ComposeTripleHash> ids;
  std::deque<ComposeTriple> queue;
  auto state_of = [&](ComposeTriple t) {
    auto [it, inserted] = ids.try_emplace(t, kNoState);
    if (inserted) {
      it->second = out.add_state();
      queue.push_back(t);
    }
    return it->second;
  };

  detail::InputLabelIndex<W> index(b);
  out.set_start(state_of({a.start(), b.start(), 0}));

  while (!queue.empty()) {
    ComposeTriple t = queue.front();
    queue.pop_front();
    StateId src = ids.at(t);

    W fw = times(a.final_weight(t.left), b.final_weight(t.right));
    if (!(fw == W::zero())) out.set_final(src, fw);

    for (const auto& x : a.arcs(t.left)) {
      if (x.olabel == kEpsilon) {
        if (t.filter == 0) {
          StateId dst = state_of({x.next, t.right, 0});
          out.add_arc(src, x.ilabel, kEpsilon, x.weight, dst);
        }
        continue;
      }
      auto [first, last] = index.find(t.right, x.olabel);
      auto barcs = b.arcs(t.right);
      for (auto it = first; it != last; ++it) {
        const auto& y = barcs[*it];
        StateId dst = state_of({x.next, y.next, 0});
        out.add_arc(src, x.ilabel, y.olabel, times(x.weight, y.weight), dst);
      }
    }

    auto [first, last] = index.find(t.right, kEpsilon);
    auto barcs = b.arcs(t.right);
    for (auto it = first; it != last; ++it) {
      const auto& y = barcs[*it];
      StateId dst = state_of({t.left, y.next, 1});
      out.add_arc(src, kEpsilon, y.olabel, y.weight, dst);
    }
  }
  return trim(out);
}

}  // namespace fstag
