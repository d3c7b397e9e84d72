#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fstag/error.hpp"
#include "fstag/tagset.hpp"
#include "fstag/utf8.hpp"
#include "fstag/weight.hpp"

namespace fstag {

struct Analysis {
  std::string tag;
  TropicalWeight weight;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

/// Full-form lexicon: surface -> analyses, each tag at most once per surface.
class Lexicon {
 public:
  explicit Lexicon(std::shared_ptr<const TagSet> tags) : tags_(std::move(tags)) {
    if (!tags_) throw std::invalid_argument("lexicon needs a tag set");
  }

  /// Adds an entry; a repeated (surface, tag) keeps the smaller weight.
  void add(const std::string& surface, const std::string& tag, TropicalWeight weight = TropicalWeight::one()) {
    if (!tags_->is_full(tag)) throw std::out_of_range("unknown tag '" + tag + "'");
    auto& v = entries_[surface];
    auto it = std::lower_bound(v.begin(), v.end(), tag, [](const Analysis& a, const std::string& t) { return a.tag < t; });
    if (it != v.end() && it->tag == tag) {
      it->weight = plus(it->weight, weight);
    } else {
      v.insert(it, Analysis{tag, weight});
      ++num_entries_;
    }
  }

  /// Exact, case-sensitive lookup; analyses sorted by tag.
  std::span<const Analysis> lookup(const std::string& surface) const {
    auto it = entries_.find(surface);
    if (it == entries_.end()) return {};
    return it->second;
  }

  std::span<const Analysis> lookup_lowercase(const std::string& surface) const {
    return lookup(utf8::to_lower(surface));
  }

  const TagSet& tags() const { return *tags_; }
  const std::shared_ptr<const TagSet>& tag_set() const { return tags_; }
  std::size_t num_surfaces() const { return entries_.size(); }
  std::size_t num_entries() const { return num_entries_; }

  /// Surfaces in sorted order.
  std::vector<std::string> surfaces() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [s, _] : entries_) out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::shared_ptr<const TagSet> tags_;
  std::unordered_map<std::string, std::vector<Analysis>> entries_;
  std::size_t num_entries_ = 0;
};

/// Reads `surface<TAB>full_tag[<TAB>weight]` lines. Spaces inside a surface
/// become '_' so multiword entries match folded compound tokens.
inline Lexicon parse_lexicon(std::istream& in, const std::string& source, std::shared_ptr<const TagSet> tags) {
  Lexicon lex(std::move(tags));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() < 2 || f.size() > 3 || f[0].empty() || f[1].empty())
      throw FormatError(source, n, "expected 'surface<TAB>tag[<TAB>weight]'");
    std::replace(f[0].begin(), f[0].end(), ' ', '_');
    TropicalWeight w = TropicalWeight::one();
    if (f.size() == 3) {
      try {
        w = parse_weight(f[2]);
      } catch (const std::exception& e) {
        throw FormatError(source, n, e.what());
      }
      if (w.value() < 0) throw FormatError(source, n, "negative weight");
    }
    if (!lex.tags().is_full(f[1])) throw FormatError(source, n, "unknown tag '" + f[1] + "'");
    lex.add(f[0], f[1], w);
  }
  return lex;
}

inline Lexicon load_lexicon(const std::string& path, std::shared_ptr<const TagSet> tags) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open lexicon");
  return parse_lexicon(in, path, std::move(tags));
}

}  // namespace fstag
