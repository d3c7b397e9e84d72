#pragma once

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fstag/error.hpp"
#include "fstag/utf8.hpp"

namespace fstag {

enum class Shape { lowercase, capitalized, all_caps, mixed, numeric, punctuation };

inline std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::lowercase: return "lowercase";
    case Shape::capitalized: return "capitalized";
    case Shape::all_caps: return "all-caps";
    case Shape::mixed: return "mixed";
    case Shape::numeric: return "numeric";
    case Shape::punctuation: return "punctuation";
  }
  return "?";
}

inline Shape shape_of(std::string_view surface) {
  if (surface.empty()) throw std::invalid_argument("empty token");
  auto cps = utf8::decode(surface);
  std::size_t letters = 0, upper = 0, lower = 0, digits = 0, number_punct = 0;
  for (char32_t c : cps) {
    if (utf8::is_letter(c)) {
      ++letters;
      utf8::is_upper(c) ? ++upper : ++lower;
    } else if (utf8::is_digit(c)) {
      ++digits;
    } else if (c == '.' || c == ',' || c == '-' || c == '+' || c == '/' || c == ':' || c == '%') {
      ++number_punct;
    }
  }
  if (letters == 0) {
    if (digits == 0) return Shape::punctuation;
    if (digits + number_punct == cps.size()) return Shape::numeric;
    return Shape::mixed;
  }
  if (upper == letters && letters >= 2) return Shape::all_caps;
  if (utf8::is_upper(cps.front())) return Shape::capitalized;
  if (lower == letters) return Shape::lowercase;
  return Shape::mixed;
}

struct Token {
  std::string surface;
  Shape shape = Shape::lowercase;
  bool compound = false;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Token for an already-segmented surface; '_' marks a folded compound.
inline Token make_token(std::string surface) {
  Token t;
  t.shape = shape_of(surface);
  auto us = surface.find('_');
  t.compound = us != std::string::npos && us > 0 && us + 1 < surface.size();
  t.surface = std::move(surface);
  return t;
}

struct Sentence {
  std::vector<Token> tokens;
};

struct TokenizerOptions {
  bool split_clitics = true;
};

namespace detail {

inline bool is_apostrophe(char32_t c) { return c == '\'' || c == 0x2019; }
inline bool is_word_char(char32_t c) { return utf8::is_letter(c) || utf8::is_digit(c); }
inline bool is_terminal(const std::string& piece) {
  return piece == "!" || piece == "?" || (!piece.empty() && piece.find_first_not_of('.') == std::string::npos);
}

struct Chunk {
  std::vector<std::string> pieces;
  bool ends_sentence = false;  // carries terminal punctuation in its tail
  bool starts_upper = false;
};

inline Chunk split_chunk(const std::vector<char32_t>& cps, const TokenizerOptions& opt) {
  Chunk chunk;
  chunk.starts_upper = !cps.empty() && utf8::is_upper(cps.front());
  std::size_t b = 0, e = cps.size();

  // Leading punctuation, one token per character except runs of dots.
  while (b < e && !is_word_char(cps[b])) {
    std::size_t run = b + 1;
    if (cps[b] == '.')
      while (run < e && cps[run] == '.') ++run;
    chunk.pieces.push_back(utf8::encode({cps.begin() + b, cps.begin() + run}));
    b = run;
  }

  // Trailing punctuation; an apostrophe right after a letter is an elision
  // mark and stays on the word.
  std::vector<std::string> tail;
  while (e > b && !is_word_char(cps[e - 1])) {
    if (is_apostrophe(cps[e - 1]) && e - 1 > b && utf8::is_letter(cps[e - 2])) break;
    std::size_t start = e - 1;
    if (cps[start] == '.')
      while (start > b && cps[start - 1] == '.') --start;
    tail.push_back(utf8::encode({cps.begin() + start, cps.begin() + e}));
    e = start;
  }
  std::reverse(tail.begin(), tail.end());

  // Core word, with clitic splits after apostrophes ("l'eau" -> "l'", "eau").
  std::size_t from = b;
  if (opt.split_clitics) {
    for (std::size_t k = b + 1; k + 1 < e; ++k) {
      if (is_apostrophe(cps[k]) && utf8::is_letter(cps[k - 1]) && is_word_char(cps[k + 1])) {
        chunk.pieces.push_back(utf8::encode({cps.begin() + from, cps.begin() + k + 1}));
        from = k + 1;
      }
    }
  }
  if (from < e) chunk.pieces.push_back(utf8::encode({cps.begin() + from, cps.begin() + e}));

  for (auto& t : tail) {
    chunk.ends_sentence = chunk.ends_sentence || is_terminal(t);
    chunk.pieces.push_back(std::move(t));
  }
  // A chunk consisting only of terminal punctuation also ends a sentence.
  if (b == e && !chunk.pieces.empty())
    for (const auto& p : chunk.pieces) chunk.ends_sentence = chunk.ends_sentence || is_terminal(p);
  return chunk;
}

inline std::vector<Chunk> split_chunks(std::string_view text, const TokenizerOptions& opt) {
  std::vector<Chunk> chunks;
  auto cps = utf8::decode(text);
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !utf8::is_space(cps[j])) ++j;
    if (j > i) chunks.push_back(split_chunk({cps.begin() + i, cps.begin() + j}, opt));
    i = j;
  }
  return chunks;
}

}  // namespace detail

/// Multiword units folded into single tokens, matched case-insensitively
/// and longest first.
class CompoundSet {
 public:
  CompoundSet() = default;
  explicit CompoundSet(const std::vector<std::string>& entries, const TokenizerOptions& opt = {}) {
    for (const auto& e : entries) add(e, opt);
  }

  void add(std::string_view entry, const TokenizerOptions& opt = {}) {
    std::vector<std::string> words;
    for (auto& c : detail::split_chunks(entry, opt))
      for (auto& p : c.pieces) words.push_back(utf8::to_lower(p));
    if (words.size() < 2) return;
    max_len_ = std::max(max_len_, words.size());
    entries_.push_back(std::move(words));
    std::sort(entries_.begin(), entries_.end());
  }

  bool empty() const { return entries_.empty(); }
  std::size_t max_length() const { return max_len_; }

  bool contains(const std::vector<std::string>& lowered) const {
    return std::binary_search(entries_.begin(), entries_.end(), lowered);
  }

 private:
  std::vector<std::vector<std::string>> entries_;
  std::size_t max_len_ = 0;
};

inline CompoundSet load_compounds(const std::string& path, const TokenizerOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open compound list");
  CompoundSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    set.add(line, opt);
  }
  return set;
}

/// Splits text into sentences of tokens.
///
/// A sentence ends after a whitespace-delimited chunk that carries terminal
/// punctuation (. ! ? or a run of dots) when the next chunk starts with an
/// uppercase letter, or at the end of the text. Punctuation becomes separate
/// tokens; listed compounds are folded into one token joined by '_'.
inline std::vector<Sentence> tokenize(std::string_view text, const CompoundSet& compounds = {},
                                      const TokenizerOptions& opt = {}) {
  std::vector<Sentence> out;
  auto chunks = detail::split_chunks(text, opt);

  std::vector<std::string> current;
  auto flush = [&] {
    if (current.empty()) return;
    Sentence s;
    for (std::size_t i = 0; i < current.size();) {
      std::size_t matched = 0;
      if (!compounds.empty()) {
        for (std::size_t len = std::min(compounds.max_length(), current.size() - i); len >= 2; --len) {
          std::vector<std::string> key;
          for (std::size_t k = 0; k < len; ++k) key.push_back(utf8::to_lower(current[i + k]));
          if (compounds.contains(key)) {
            matched = len;
            break;
          }
        }
      }
      if (matched) {
        std::string joined = current[i];
        for (std::size_t k = 1; k < matched; ++k) joined += "_" + current[i + k];
        Token t{joined, shape_of(joined), true};
        s.tokens.push_back(std::move(t));
        i += matched;
      } else {
        s.tokens.push_back(Token{current[i], shape_of(current[i]), false});
        ++i;
      }
    }
    out.push_back(std::move(s));
    current.clear();
  };

  for (std::size_t c = 0; c < chunks.size(); ++c) {
    for (auto& p : chunks[c].pieces) current.push_back(std::move(p));
    bool last = c + 1 == chunks.size();
    if (chunks[c].ends_sentence && (last || chunks[c + 1].starts_upper)) flush();
  }
  flush();
  return out;
}

}  // namespace fstag
