#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fstag/config.hpp"
#include "fstag/lattice.hpp"
#include "fstag/tagset.hpp"

namespace fstag {

/// The set of tags a word can bear, kept sorted and rendered "[t1 t2 ...]".
class Genotype {
 public:
  explicit Genotype(std::vector<std::string> tags) : tags_(std::move(tags)) {
    std::sort(tags_.begin(), tags_.end());
    tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
    if (tags_.empty()) throw std::invalid_argument("empty genotype");
  }

  /// Left padding for n-gram contexts at the start of a sentence.
  static Genotype boundary() { return Genotype({std::string(reserved::kSentenceBegin)}); }

  /// Inverse of render().
  static Genotype parse(std::string_view text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
      throw std::invalid_argument("malformed genotype '" + std::string(text) + "'");
    std::vector<std::string> tags;
    std::string_view body = text.substr(1, text.size() - 2);
    std::size_t i = 0;
    while (i < body.size()) {
      auto sp = body.find(' ', i);
      if (sp == std::string_view::npos) sp = body.size();
      if (sp == i) throw std::invalid_argument("malformed genotype '" + std::string(text) + "'");
      tags.emplace_back(body.substr(i, sp - i));
      i = sp + 1;
    }
    return Genotype(std::move(tags));
  }

  const std::vector<std::string>& tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  bool contains(std::string_view tag) const { return std::binary_search(tags_.begin(), tags_.end(), tag); }
  bool is_boundary() const { return tags_.size() == 1 && tags_[0] == reserved::kSentenceBegin; }

  Genotype with(const std::string& tag) const {
    auto t = tags_;
    t.push_back(tag);
    return Genotype(std::move(t));
  }

  std::string render() const {
    std::string out = "[";
    for (std::size_t i = 0; i < tags_.size(); ++i) {
      if (i) out += ' ';
      out += tags_[i];
    }
    return out + "]";
  }

  friend bool operator==(const Genotype&, const Genotype&) = default;
  friend auto operator<=>(const Genotype&, const Genotype&) = default;

 private:
  std::vector<std::string> tags_;
};

/// Genotype of the token's non-UNKNOWN analyses mapped into `space`, or
/// [UNKNOWN] when there are none.
inline Genotype genotype_of(const Token& token, const Lexicon& lex, const WeightConfig& cfg,
                            TagSpace space = TagSpace::full) {
  std::vector<std::string> tags;
  for (const auto& a : analyses(token, lex, cfg))
    if (a.tag != reserved::kUnknown) tags.push_back(lex.tags().to_space(a.tag, space));
  if (tags.empty()) tags.emplace_back(reserved::kUnknown);
  return Genotype(std::move(tags));
}

using Context = std::vector<Genotype>;
using Tagging = std::vector<std::string>;

inline std::string render_context(const Context& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += c[i].render();
  }
  return out;
}

inline Context parse_context(std::string_view text) {
  Context out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    auto close = text.find(']', i);
    if (text[i] != '[' || close == std::string_view::npos)
      throw std::invalid_argument("malformed context '" + std::string(text) + "'");
    out.push_back(Genotype::parse(text.substr(i, close - i + 1)));
    i = close + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty context");
  return out;
}

inline std::string render_tagging(const Tagging& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += t[i];
  }
  return out;
}

inline Tagging parse_tagging(std::string_view text) {
  Tagging out;
  std::size_t i = 0;
  while (i <= text.size()) {
    auto sp = text.find(' ', i);
    if (sp == std::string_view::npos) sp = text.size();
    if (sp == i) throw std::invalid_argument("malformed tagging '" + std::string(text) + "'");
    out.emplace_back(text.substr(i, sp - i));
    i = sp + 1;
  }
  return out;
}

}  // namespace fstag
