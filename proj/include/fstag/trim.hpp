#pragma once

#include <vector>

#include "fstag/wfst.hpp"

namespace fstag {

/// Keeps only states that lie on some start-to-final path. Surviving states
/// and their arcs keep their relative order, so trimming a trim machine
/// returns an identical machine.
template <Semiring W>
Wfst<W> trim(const Wfst<W>& m) {
  Wfst<W> out(m.input_symbols(), m.output_symbols());
  if (m.empty()) return out;

  const auto n = static_cast<StateId>(m.num_states());
  std::vector<char> access(n, 0), coaccess(n, 0);
  std::vector<std::vector<StateId>> reverse(n);

  std::vector<StateId> stack{m.start()};
  access[m.start()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const auto& a : m.arcs(s)) {
      if (a.weight == W::zero()) continue;
      reverse[a.next].push_back(s);
      if (!access[a.next]) {
        access[a.next] = 1;
        stack.push_back(a.next);
      }
    }
  }

  for (StateId s = 0; s < n; ++s)
    if (access[s] && m.is_final(s)) {
      coaccess[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s])
      if (!coaccess[p]) {
        coaccess[p] = 1;
        stack.push_back(p);
      }
  }

  if (!coaccess[m.start()]) return out;

  std::vector<StateId> remap(n, kNoState);
  for (StateId s = 0; s < n; ++s)
    if (access[s] && coaccess[s]) remap[s] = out.add_state();
  out.set_start(remap[m.start()]);
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kNoState) continue;
    out.set_final(remap[s], m.final_weight(s));
    for (const auto& a : m.arcs(s)) {
      if (remap[a.next] == kNoState || a.weight == W::zero()) continue;
      out.add_arc(remap[s], a.ilabel, a.olabel, a.weight, remap[a.next]);
    }
  }
  return out;
}

}  // namespace fstag
