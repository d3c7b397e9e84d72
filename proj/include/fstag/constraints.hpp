#pragma once

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fstag/compose.hpp"
#include "fstag/error.hpp"
#include "fstag/tagset.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

/// A forbidden adjacency of 2 or 3 (generic) tags. SB may open a pattern to
/// anchor it at the start of the sentence.
struct ConstraintRule {
  std::vector<std::string> pattern;
  std::size_t line = 0;

  friend bool operator==(const ConstraintRule& a, const ConstraintRule& b) { return a.pattern == b.pattern; }
};

inline std::vector<ConstraintRule> parse_rules(std::istream& in, const std::string& source) {
  std::vector<ConstraintRule> rules;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = line.substr(0, line.find('#'));
    std::istringstream ls(line);
    ConstraintRule rule{{}, n};
    for (std::string tok; ls >> tok;) rule.pattern.push_back(tok);
    if (rule.pattern.empty()) continue;
    if (rule.pattern.size() < 2 || rule.pattern.size() > 3)
      throw FormatError(source, n, "rule must have 2 or 3 elements, got " + std::to_string(rule.pattern.size()));
    for (std::size_t i = 1; i < rule.pattern.size(); ++i)
      if (rule.pattern[i] == reserved::kSentenceBegin) throw FormatError(source, n, "SB may only open a rule");
    rules.push_back(std::move(rule));
  }
  return rules;
}

inline std::vector<ConstraintRule> load_rules(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open rule file");
  return parse_rules(in, path);
}

using TagSequence = std::vector<std::string>;

/// Cartesian product of the prefix expansions of each element, sorted.
inline std::vector<TagSequence> expand_rule(const ConstraintRule& rule, const TagSet& tags) {
  std::vector<TagSequence> out{{}};
  for (std::size_t i = 0; i < rule.pattern.size(); ++i) {
    const auto& g = rule.pattern[i];
    std::vector<std::string> options;
    if (g == reserved::kSentenceBegin) {
      if (i != 0) throw std::invalid_argument("SB may only open a rule");
      options.emplace_back(reserved::kSentenceBegin);
    } else {
      options = tags.expand(g);
    }
    if (options.empty()) throw std::invalid_argument("generic tag '" + g + "' matches no tag");
    std::vector<TagSequence> next;
    next.reserve(out.size() * options.size());
    for (const auto& prefix : out)
      for (const auto& t : options) {
        next.push_back(prefix);
        next.back().push_back(t);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Expanded constraint set and its penalty transducer.
///
/// The transducer is the Aho-Corasick automaton of the expanded sequences
/// over the tag alphabet, fully expanded (one arc per state and tag). Every
/// arc is an identity tag:tag arc; an arc entering a state where k forbidden
/// sequences end weighs k * w_neg, all others weigh 0. Every state is final,
/// so every tag string is accepted. The start state is the automaton state
/// after reading SB, which anchors SB-initial sequences at the sentence start.
struct CompiledConstraints {
  std::set<TagSequence> expanded;
  StdWfst transducer;
  double w_neg = 0.0;
};

inline CompiledConstraints compile(const std::vector<ConstraintRule>& rules, const TagSet& tags, double w_neg) {
  CompiledConstraints cc;
  cc.w_neg = w_neg;
  for (const auto& r : rules) {
    auto seqs = expand_rule(r, tags);
    cc.expanded.insert(seqs.begin(), seqs.end());
  }

  const auto& syms = tags.symbols();
  constexpr Label kSbLabel = -2;
  auto label_of = [&](const std::string& t) {
    return t == reserved::kSentenceBegin ? kSbLabel : syms->id(t);
  };

  // Trie.
  std::vector<std::map<Label, int>> child(1);
  std::vector<int> out_count(1, 0);
  for (const auto& seq : cc.expanded) {
    int node = 0;
    for (const auto& t : seq) {
      Label l = label_of(t);
      auto it = child[node].find(l);
      if (it == child[node].end()) {
        child.emplace_back();
        out_count.push_back(0);
        it = child[node].emplace(l, static_cast<int>(child.size()) - 1).first;
      }
      node = it->second;
    }
    ++out_count[node];
  }

  // Failure links, accumulating match counts along suffix chains.
  std::vector<int> fail(child.size(), 0);
  std::deque<int> queue;
  for (auto [l, c] : child[0]) queue.push_back(c);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [l, v] : child[u]) {
      int f = fail[u];
      while (f != 0 && !child[f].count(l)) f = fail[f];
      auto it = child[f].find(l);
      fail[v] = (it != child[f].end() && it->second != v) ? it->second : 0;
      out_count[v] += out_count[fail[v]];
      queue.push_back(v);
    }
  }

  std::vector<std::map<Label, int>> memo(child.size());
  auto step = [&](auto&& self, int s, Label l) -> int {
    if (auto it = child[s].find(l); it != child[s].end()) return it->second;
    if (s == 0) return 0;
    if (auto it = memo[s].find(l); it != memo[s].end()) return it->second;
    int r = self(self, fail[s], l);
    memo[s][l] = r;
    return r;
  };

  // Alphabet: every full tag (reserved included), in label order.
  std::vector<Label> alphabet;
  for (const auto& t : tags.full_tags()) alphabet.push_back(syms->id(t));
  std::sort(alphabet.begin(), alphabet.end());

  StdWfst m(syms, syms);
  std::map<int, StateId> ids;
  std::deque<int> pending;
  auto state_of = [&](int node) {
    auto [it, inserted] = ids.try_emplace(node, kNoState);
    if (inserted) {
      it->second = m.add_state();
      m.set_final(it->second);
      pending.push_back(node);
    }
    return it->second;
  };
  m.set_start(state_of(step(step, 0, kSbLabel)));
  while (!pending.empty()) {
    int node = pending.front();
    pending.pop_front();
    StateId src = ids.at(node);
    for (Label l : alphabet) {
      int next = step(step, node, l);
      StateId dst = state_of(next);
      m.add_arc(src, l, l, TropicalWeight(out_count[next] * w_neg), dst);
    }
  }
  cc.transducer = std::move(m);
  return cc;
}

/// Adds the constraint penalties to a lattice (word:tag) without removing
/// any path.
inline StdWfst apply(const CompiledConstraints& cc, const StdWfst& lattice) {
  return compose(lattice, cc.transducer);
}

}  // namespace fstag
