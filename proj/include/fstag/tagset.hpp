#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fstag/error.hpp"
#include "fstag/wfst.hpp"

namespace fstag {

/// Tags every tag set carries regardless of its file.
namespace reserved {
inline constexpr std::string_view kUnknown = "UNKNOWN";
inline constexpr std::string_view kProperNoun = "NPR";
inline constexpr std::string_view kAcronym = "ACR";
inline constexpr std::string_view kPunct = "PUNCT";
/// Sentence-beginning marker. Only used in constraint patterns and n-gram
/// contexts; never a lattice label.
inline constexpr std::string_view kSentenceBegin = "SB";
}  // namespace reserved

/// Which tag inventory statistics are kept over.
enum class TagSpace { full, collapsed };

inline std::string_view to_string(TagSpace s) { return s == TagSpace::full ? "full" : "collapsed"; }

inline void check_tag_name(std::string_view tag) {
  if (tag.empty() || tag.find_first_of(" \t[]") != std::string_view::npos)
    throw std::invalid_argument("invalid tag name '" + std::string(tag) + "'");
}

/// Full morphological tags, their collapsed (short) images, and the shared
/// tag symbol table used as the label alphabet of every tag-side machine.
class TagSet {
 public:
  /// `pairs` maps full tag -> short tag. Reserved tags are added with an
  /// identity mapping.
  explicit TagSet(const std::vector<std::pair<std::string, std::string>>& pairs) {
    for (const auto& [full, short_tag] : pairs) {
      check_tag_name(full);
      check_tag_name(short_tag);
      if (full == reserved::kSentenceBegin || short_tag == reserved::kSentenceBegin)
        throw std::invalid_argument("tag name SB is reserved for the sentence boundary");
      auto [it, inserted] = collapse_.emplace(full, short_tag);
      if (!inserted && it->second != short_tag)
        throw std::invalid_argument("tag '" + full + "' collapses to both '" + it->second + "' and '" + short_tag + "'");
    }
    for (auto r : {reserved::kUnknown, reserved::kProperNoun, reserved::kAcronym, reserved::kPunct})
      collapse_.emplace(std::string(r), std::string(r));

    std::set<std::string> shorts;
    for (const auto& [full, short_tag] : collapse_) {
      full_.push_back(full);
      shorts.insert(short_tag);
    }
    short_.assign(shorts.begin(), shorts.end());

    // Ordinary tags get the smallest ids (sorted), reserved ones follow, then
    // short-only tags. Shortest-path ties therefore prefer ordinary tags.
    auto syms = std::make_shared<SymbolTable>();
    for (const auto& t : full_)
      if (!is_reserved(t)) syms->add(t);
    for (auto r : {reserved::kProperNoun, reserved::kAcronym, reserved::kPunct, reserved::kUnknown}) syms->add(r);
    for (const auto& t : short_) syms->add(t);
    symbols_ = syms;

    collapse_fst_ = StdWfst(symbols_, symbols_);
    StateId s = collapse_fst_.add_state();
    collapse_fst_.set_start(s);
    collapse_fst_.set_final(s);
    for (const auto& [full, short_tag] : collapse_)
      collapse_fst_.add_arc(s, symbols_->id(full), symbols_->id(short_tag), TropicalWeight::one(), s);
  }

  /// Tag set whose collapse map is the identity.
  static TagSet identity(const std::vector<std::string>& tags) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& t : tags) pairs.emplace_back(t, t);
    return TagSet(pairs);
  }

  static bool is_reserved(std::string_view tag) {
    return tag == reserved::kUnknown || tag == reserved::kProperNoun || tag == reserved::kAcronym ||
           tag == reserved::kPunct || tag == reserved::kSentenceBegin;
  }

  bool is_full(std::string_view tag) const { return collapse_.count(std::string(tag)) > 0; }
  bool is_short(std::string_view tag) const { return std::binary_search(short_.begin(), short_.end(), tag); }

  const std::string& collapse(std::string_view full) const {
    auto it = collapse_.find(std::string(full));
    if (it == collapse_.end()) throw std::out_of_range("unknown tag '" + std::string(full) + "'");
    return it->second;
  }

  /// Full tags having `generic` as a prefix. UNKNOWN and PUNCT never match.
  std::vector<std::string> expand(std::string_view generic) const {
    std::vector<std::string> out;
    for (auto it = collapse_.lower_bound(std::string(generic)); it != collapse_.end(); ++it) {
      if (it->first.compare(0, generic.size(), generic) != 0) break;
      if (it->first == reserved::kUnknown || it->first == reserved::kPunct) continue;
      out.push_back(it->first);
    }
    return out;
  }

  /// Sorted full tags, reserved ones included.
  const std::vector<std::string>& full_tags() const { return full_; }
  const std::vector<std::string>& short_tags() const { return short_; }
  const SymbolTablePtr& symbols() const { return symbols_; }
  /// One-state transducer rewriting every full tag to its short tag.
  const StdWfst& collapse_transducer() const { return collapse_fst_; }

  /// Maps a tag to `space`: short tags pass through, full tags collapse.
  std::string to_space(std::string_view tag, TagSpace space) const {
    if (space == TagSpace::full) {
      if (!is_full(tag)) throw std::out_of_range("unknown tag '" + std::string(tag) + "'");
      return std::string(tag);
    }
    if (is_short(tag)) return std::string(tag);
    return collapse(tag);
  }

 private:
  std::map<std::string, std::string> collapse_;
  std::vector<std::string> full_;
  std::vector<std::string> short_;
  SymbolTablePtr symbols_;
  StdWfst collapse_fst_;
};

/// Reads `full_tag<TAB>short_tag` lines; a line with one field maps the tag
/// to itself. Blank lines and '#' comments are skipped.
inline TagSet parse_tagset(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> f;
    for (std::string tok; ls >> tok;) f.push_back(tok);
    if (f.empty() || f[0][0] == '#') continue;
    if (f.size() > 2) throw FormatError(source, n, "expected 'full_tag<TAB>short_tag'");
    try {
      check_tag_name(f[0]);
      check_tag_name(f.back());
    } catch (const std::exception& e) {
      throw FormatError(source, n, e.what());
    }
    pairs.emplace_back(f[0], f.back());
  }
  try {
    return TagSet(pairs);
  } catch (const std::invalid_argument& e) {
    throw FormatError(source, 0, e.what());
  }
}

inline TagSet load_tagset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open tag set");
  return parse_tagset(in, path);
}

}  // namespace fstag
