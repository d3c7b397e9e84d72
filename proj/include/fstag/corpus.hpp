#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fstag/error.hpp"
#include "fstag/tagset.hpp"
#include "fstag/tokenizer.hpp"

namespace fstag {

struct TaggedToken {
  std::string surface;
  std::string tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct GoldSentence {
  std::vector<TaggedToken> tokens;

  friend bool operator==(const GoldSentence&, const GoldSentence&) = default;
};

using TaggedCorpus = std::vector<GoldSentence>;

/// Reads `token<TAB>tag` lines, blank line between sentences. When `tags` is
/// given every tag must be a full or short tag of it.
inline TaggedCorpus parse_tagged_corpus(std::istream& in, const std::string& source, const TagSet* tags = nullptr) {
  TaggedCorpus corpus;
  GoldSentence current;
  std::string line;
  std::size_t n = 0;
  auto flush = [&] {
    if (!current.tokens.empty()) corpus.push_back(std::move(current));
    current = {};
  };
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || line.find('\t', tab + 1) != std::string::npos)
      throw FormatError(source, n, "expected 'token<TAB>tag'");
    TaggedToken tok{line.substr(0, tab), line.substr(tab + 1)};
    if (tok.tag.empty()) throw FormatError(source, n, "missing tag");
    if (tags && !tags->is_full(tok.tag) && !tags->is_short(tok.tag))
      throw FormatError(source, n, "unknown tag '" + tok.tag + "'");
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return corpus;
}

inline TaggedCorpus load_tagged_corpus(const std::string& path, const TagSet* tags = nullptr) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open corpus");
  return parse_tagged_corpus(in, path, tags);
}

inline void write_tagged_corpus(std::ostream& out, const TaggedCorpus& corpus) {
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (i) out << '\n';
    for (const auto& t : corpus[i].tokens) out << t.surface << '\t' << t.tag << '\n';
  }
}

inline Sentence to_sentence(const GoldSentence& gold) {
  Sentence s;
  s.tokens.reserve(gold.tokens.size());
  for (const auto& t : gold.tokens) s.tokens.push_back(make_token(t.surface));
  return s;
}

}  // namespace fstag
