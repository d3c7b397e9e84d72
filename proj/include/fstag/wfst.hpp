#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fstag/symbol_table.hpp"
#include "fstag/weight.hpp"

namespace fstag {

using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

template <Semiring W>
struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  W weight = W::one();
  StateId next = kNoState;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct MachineStats {
  std::size_t states = 0;
  std::size_t arcs = 0;

  friend bool operator==(const MachineStats&, const MachineStats&) = default;
};

/// Weighted finite-state transducer stored as per-state arc lists.
///
/// A machine with no states is the empty machine (accepts nothing). Final
/// weights default to W::zero(), meaning non-final. Machines are built with
/// the mutators and then treated as values; none of the algorithms mutate
/// their inputs.
template <Semiring W = TropicalWeight>
class Wfst {
 public:
  using Weight = W;
  using ArcType = Arc<W>;

  Wfst() : Wfst(std::make_shared<SymbolTable>(), nullptr) {}

  /// `osyms` defaults to `isyms` (an acceptor-style machine).
  Wfst(SymbolTablePtr isyms, SymbolTablePtr osyms)
      : isyms_(std::move(isyms)), osyms_(osyms ? std::move(osyms) : isyms_) {
    if (!isyms_) throw std::invalid_argument("null input symbol table");
  }

  StateId add_state() {
    arcs_.emplace_back();
    final_.push_back(W::zero());
    return static_cast<StateId>(arcs_.size() - 1);
  }

  void reserve_states(std::size_t n) {
    arcs_.reserve(n);
    final_.reserve(n);
  }

  void set_start(StateId s) {
    check_state(s);
    start_ = s;
  }

  void set_final(StateId s, W w = W::one()) {
    check_state(s);
    final_[s] = w;
  }

  void add_arc(StateId from, ArcType arc) {
    check_state(from);
    check_state(arc.next);
    arcs_[from].push_back(std::move(arc));
  }

  void add_arc(StateId from, Label ilabel, Label olabel, W weight, StateId to) {
    add_arc(from, ArcType{ilabel, olabel, weight, to});
  }

  StateId start() const { return start_; }
  std::size_t num_states() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty() || start_ == kNoState; }

  std::span<const ArcType> arcs(StateId s) const {
    check_state(s);
    return arcs_[s];
  }
  std::size_t num_arcs(StateId s) const { return arcs(s).size(); }

  W final_weight(StateId s) const {
    check_state(s);
    return final_[s];
  }
  bool is_final(StateId s) const { return !(final_weight(s) == W::zero()); }

  const SymbolTablePtr& input_symbols() const { return isyms_; }
  const SymbolTablePtr& output_symbols() const { return osyms_; }

  void set_input_symbols(SymbolTablePtr syms) { isyms_ = std::move(syms); }
  void set_output_symbols(SymbolTablePtr syms) { osyms_ = std::move(syms); }

  bool valid_state(StateId s) const {
    return s >= 0 && static_cast<std::size_t>(s) < arcs_.size();
  }

  friend bool operator==(const Wfst& a, const Wfst& b) {
    return a.start_ == b.start_ && a.arcs_ == b.arcs_ && a.final_ == b.final_ &&
           *a.isyms_ == *b.isyms_ && *a.osyms_ == *b.osyms_;
  }

 private:
  void check_state(StateId s) const {
    if (!valid_state(s)) throw std::out_of_range("invalid state id " + std::to_string(s));
  }

  std::vector<std::vector<ArcType>> arcs_;
  std::vector<W> final_;
  StateId start_ = kNoState;
  SymbolTablePtr isyms_;
  SymbolTablePtr osyms_;
};

using StdWfst = Wfst<TropicalWeight>;

template <Semiring W>
MachineStats stats(const Wfst<W>& m) {
  MachineStats s{m.num_states(), 0};
  for (StateId q = 0; q < static_cast<StateId>(m.num_states()); ++q) s.arcs += m.num_arcs(q);
  return s;
}

/// Identity chain accepting exactly `symbols`, all weights one.
template <Semiring W = TropicalWeight>
Wfst<W> linear_acceptor(std::span<const Label> symbols, SymbolTablePtr syms) {
  if (symbols.empty()) throw std::invalid_argument("empty input");
  Wfst<W> m(syms, syms);
  m.reserve_states(symbols.size() + 1);
  StateId prev = m.add_state();
  m.set_start(prev);
  for (Label l : symbols) {
    if (l == kEpsilon) throw std::invalid_argument("epsilon in linear acceptor input");
    if (!syms->contains(l)) throw std::out_of_range("label " + std::to_string(l) + " not in symbol table");
    StateId next = m.add_state();
    m.add_arc(prev, l, l, W::one(), next);
    prev = next;
  }
  m.set_final(prev, W::one());
  return m;
}

/// Convenience overload that interns `words` into `syms` (or a fresh table).
template <Semiring W = TropicalWeight>
Wfst<W> linear_acceptor(std::span<const std::string> words,
                        std::shared_ptr<SymbolTable> syms = std::make_shared<SymbolTable>()) {
  std::vector<Label> ids;
  ids.reserve(words.size());
  for (const auto& w : words) ids.push_back(syms->add(w));
  return linear_acceptor<W>(std::span<const Label>(ids), SymbolTablePtr(syms));
}

/// Single-state identity transducer over every non-epsilon symbol of `syms`.
template <Semiring W = TropicalWeight>
Wfst<W> identity_transducer(SymbolTablePtr syms) {
  Wfst<W> m(syms, syms);
  StateId s = m.add_state();
  m.set_start(s);
  m.set_final(s, W::one());
  for (Label l = 1; l < static_cast<Label>(syms->size()); ++l)
    if (syms->contains(l)) m.add_arc(s, l, l, W::one(), s);
  return m;
}

}  // namespace fstag
