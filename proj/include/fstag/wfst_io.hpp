#pragma once

#include <algorithm>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fstag/error.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

/// Text form, one record per line:
///   start <id>
///   isym <string> <id>      osym <string> <id>
///   <src> <ilabel> <olabel> <weight> <dst>
///   <state> <weight>        (final state)
/// The epsilon symbol is implicit. "inf" denotes +inf.
inline void write_text(std::ostream& os, const StdWfst& m) {
  if (!m.empty()) os << "start " << m.start() << '\n';
  for (Label l = 1; l < static_cast<Label>(m.input_symbols()->size()); ++l)
    if (m.input_symbols()->contains(l)) os << "isym " << m.input_symbols()->symbol(l) << ' ' << l << '\n';
  for (Label l = 1; l < static_cast<Label>(m.output_symbols()->size()); ++l)
    if (m.output_symbols()->contains(l)) os << "osym " << m.output_symbols()->symbol(l) << ' ' << l << '\n';
  for (StateId s = 0; s < static_cast<StateId>(m.num_states()); ++s) {
    for (const auto& a : m.arcs(s))
      os << s << ' ' << a.ilabel << ' ' << a.olabel << ' ' << to_string(a.weight) << ' ' << a.next << '\n';
    if (m.is_final(s)) os << s << ' ' << to_string(m.final_weight(s)) << '\n';
  }
}

inline std::string to_text(const StdWfst& m) {
  std::ostringstream os;
  write_text(os, m);
  return os.str();
}

inline StdWfst read_text(std::istream& is, const std::string& source = "<stream>") {
  auto isyms = std::make_shared<SymbolTable>();
  auto osyms = std::make_shared<SymbolTable>();
  struct RawArc {
    StateId src;
    Label il, ol;
    TropicalWeight w;
    StateId dst;
  };
  std::vector<RawArc> arcs;
  std::vector<std::pair<StateId, TropicalWeight>> finals;
  StateId start = kNoState;
  StateId max_state = -1;

  auto parse_state = [&](const std::string& f, std::size_t line) {
    try {
      std::size_t used = 0;
      long v = std::stol(f, &used);
      if (used != f.size() || v < 0) throw std::invalid_argument(f);
      return static_cast<StateId>(v);
    } catch (const std::exception&) {
      throw FormatError(source, line, "bad integer '" + f + "'");
    }
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(is, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::vector<std::string> f;
    for (std::string tok; ls >> tok;) f.push_back(tok);
    if (f.empty()) continue;
    try {
      if (f[0] == "start") {
        if (f.size() != 2) throw FormatError(source, line, "expected 'start <id>'");
        start = parse_state(f[1], line);
        max_state = std::max(max_state, start);
      } else if (f[0] == "isym" || f[0] == "osym") {
        if (f.size() != 3) throw FormatError(source, line, "expected '" + f[0] + " <string> <id>'");
        (f[0] == "isym" ? isyms : osyms)->add(f[1], parse_state(f[2], line));
      } else if (f.size() == 5) {
        RawArc a{parse_state(f[0], line), parse_state(f[1], line), parse_state(f[2], line),
                 parse_weight(f[3]), parse_state(f[4], line)};
        max_state = std::max({max_state, a.src, a.dst});
        arcs.push_back(a);
      } else if (f.size() == 2) {
        StateId s = parse_state(f[0], line);
        max_state = std::max(max_state, s);
        finals.emplace_back(s, parse_weight(f[1]));
      } else {
        throw FormatError(source, line, "unrecognized record");
      }
    } catch (const FormatError&) {
      throw;
    } catch (const std::exception& e) {
      throw FormatError(source, line, e.what());
    }
  }

  StdWfst m(isyms, osyms);
  for (StateId s = 0; s <= max_state; ++s) m.add_state();
  if (max_state >= 0) {
    if (start == kNoState) throw FormatError(source, line, "missing start record");
    m.set_start(start);
  }
  for (const auto& a : arcs) {
    if (a.il != kEpsilon && !isyms->contains(a.il))
      throw FormatError(source, 0, "input label " + std::to_string(a.il) + " has no symbol");
    if (a.ol != kEpsilon && !osyms->contains(a.ol))
      throw FormatError(source, 0, "output label " + std::to_string(a.ol) + " has no symbol");
    m.add_arc(a.src, a.il, a.ol, a.w, a.dst);
  }
  for (auto [s, w] : finals) m.set_final(s, w);
  return m;
}

}  // namespace fstag
