#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fstag/corpus.hpp"
#include "fstag/error.hpp"
#include "fstag/genotype.hpp"
#include "fstag/weight.hpp"

namespace fstag {

/// Tagging counts per genotype context for one n-gram order.
class NgramTable {
 public:
  struct Entry {
    std::map<Tagging, std::uint64_t> counts;
    std::uint64_t total = 0;
  };

  explicit NgramTable(std::size_t order = 1) : order_(order) {
    if (order < 1 || order > 3) throw std::invalid_argument("n-gram order must be 1, 2 or 3");
  }

  std::size_t order() const { return order_; }

  void add(const Context& context, const Tagging& tagging, std::uint64_t n = 1) {
    if (context.size() != order_ || tagging.size() != order_)
      throw std::invalid_argument("expected " + std::to_string(order_) + "-gram, got '" + render_context(context) +
                                  "' -> '" + render_tagging(tagging) + "'");
    for (std::size_t i = 0; i < order_; ++i)
      if (!context[i].contains(tagging[i]))
        throw std::invalid_argument("tag '" + tagging[i] + "' is not in genotype " + context[i].render());
    if (n == 0) return;
    auto& e = table_[context];
    e.counts[tagging] += n;
    e.total += n;
  }

  const Entry* find(const Context& context) const {
    auto it = table_.find(context);
    return it == table_.end() ? nullptr : &it->second;
  }

  bool contains(const Context& context) const { return find(context) != nullptr; }

  std::uint64_t total(const Context& context) const {
    auto* e = find(context);
    return e ? e->total : 0;
  }

  std::uint64_t count(const Context& context, const Tagging& tagging) const {
    auto* e = find(context);
    if (!e) return 0;
    auto it = e->counts.find(tagging);
    return it == e->counts.end() ? 0 : it->second;
  }

  /// Sum of the counts of taggings in `context` that start with `prefix`.
  std::uint64_t prefix_total(const Context& context, std::span<const std::string> prefix) const {
    auto* e = find(context);
    if (!e) return 0;
    if (prefix.empty()) return e->total;
    Tagging lo(prefix.begin(), prefix.end());
    std::uint64_t sum = 0;
    for (auto it = e->counts.lower_bound(lo); it != e->counts.end(); ++it) {
      if (!std::equal(prefix.begin(), prefix.end(), it->first.begin())) break;
      sum += it->second;
    }
    return sum;
  }

  const std::map<Context, Entry>& entries() const { return table_; }
  std::size_t num_contexts() const { return table_.size(); }
  std::size_t num_entries() const {
    std::size_t n = 0;
    for (const auto& [_, e] : table_) n += e.counts.size();
    return n;
  }

  friend bool operator==(const NgramTable& a, const NgramTable& b) {
    if (a.order_ != b.order_ || a.table_.size() != b.table_.size()) return false;
    for (auto ia = a.table_.begin(), ib = b.table_.begin(); ia != a.table_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.counts != ib->second.counts) return false;
    return true;
  }

 private:
  std::size_t order_;
  std::map<Context, Entry> table_;
};

struct ModelMeta {
  TagSpace space = TagSpace::collapsed;
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;
  std::uint64_t genotypes = 0;
  std::uint64_t coerced = 0;

  friend bool operator==(const ModelMeta&, const ModelMeta&) = default;
};

class GenotypeModel {
 public:
  GenotypeModel() : tables_{NgramTable(1), NgramTable(2), NgramTable(3)} {}

  const NgramTable& table(std::size_t order) const { return tables_.at(order - 1); }
  NgramTable& table(std::size_t order) { return tables_.at(order - 1); }
  TagSpace space() const { return meta.space; }

  ModelMeta meta;

  friend bool operator==(const GenotypeModel& a, const GenotypeModel& b) {
    return a.meta == b.meta && a.tables_ == b.tables_;
  }

 private:
  std::array<NgramTable, 3> tables_;
};

struct TrainOptions {
  TagSpace space = TagSpace::collapsed;
  /// Reject gold tags outside their token's genotype instead of adding them.
  bool strict = false;
  std::ostream* warnings = nullptr;
};

/// Counts unigram, bigram and trigram genotype taggings. Each sentence is
/// padded on the left with the boundary genotype [SB] (tag SB), so the first
/// token contributes a bigram ([SB], G0) and the second a trigram
/// ([SB], G0, G1).
inline GenotypeModel train(const TaggedCorpus& corpus, const Lexicon& lex, const WeightConfig& cfg,
                           const TrainOptions& opt = {}) {
  GenotypeModel model;
  model.meta.space = opt.space;
  const TagSet& tags = lex.tags();
  std::set<std::string> types;
  std::set<Genotype> genotypes;

  for (std::size_t si = 0; si < corpus.size(); ++si) {
    const auto& gold = corpus[si];
    if (gold.tokens.empty()) continue;
    Context g{Genotype::boundary()};
    Tagging t{std::string(reserved::kSentenceBegin)};
    for (std::size_t ti = 0; ti < gold.tokens.size(); ++ti) {
      const auto& tok = gold.tokens[ti];
      auto where = [&] {
        return "sentence " + std::to_string(si + 1) + ", token " + std::to_string(ti + 1) + " '" + tok.surface + "'";
      };
      std::string tag;
      try {
        tag = tags.to_space(tok.tag, opt.space);
      } catch (const std::out_of_range&) {
        throw std::invalid_argument(where() + ": tag '" + tok.tag + "' is not a " +
                                    std::string(to_string(opt.space)) + " tag");
      }
      Genotype geno = genotype_of(make_token(tok.surface), lex, cfg, opt.space);
      if (!geno.contains(tag)) {
        if (opt.strict) throw std::invalid_argument(where() + ": gold tag '" + tag + "' not in " + geno.render());
        if (opt.warnings) *opt.warnings << "warning: " << where() << ": gold tag '" << tag << "' added to " << geno.render() << '\n';
        geno = geno.with(tag);
        ++model.meta.coerced;
      }
      types.insert(tok.surface);
      genotypes.insert(geno);
      g.push_back(std::move(geno));
      t.push_back(std::move(tag));
    }

    for (std::size_t i = 1; i < g.size(); ++i) {
      model.table(1).add({g[i]}, {t[i]});
      model.table(2).add({g[i - 1], g[i]}, {t[i - 1], t[i]});
      if (i >= 2) model.table(3).add({g[i - 2], g[i - 1], g[i]}, {t[i - 2], t[i - 1], t[i]});
    }
    ++model.meta.sentences;
    model.meta.tokens += gold.tokens.size();
  }
  model.meta.types = types.size();
  model.meta.genotypes = genotypes.size();
  return model;
}

/// -ln(f_t / f) for a tagging of a context of any order. No value when the
/// context was never seen; zero() (+inf) when seen without this tagging.
inline std::optional<TropicalWeight> weight(const GenotypeModel& model, const Context& context,
                                            const Tagging& tagging) {
  if (context.empty() || context.size() > 3 || tagging.size() != context.size())
    throw std::invalid_argument("context and tagging must have the same order (1 to 3)");
  const auto& table = model.table(context.size());
  std::uint64_t f = table.total(context);
  if (f == 0) return std::nullopt;
  std::uint64_t ft = table.count(context, tagging);
  if (ft == 0) return TropicalWeight::zero();
  return TropicalWeight(-std::log(static_cast<double>(ft) / static_cast<double>(f)));
}

inline void write_model(std::ostream& out, const GenotypeModel& model) {
  const auto& m = model.meta;
  out << "meta\n"
      << "space\t" << to_string(m.space) << '\n'
      << "sentences\t" << m.sentences << '\n'
      << "tokens\t" << m.tokens << '\n'
      << "types\t" << m.types << '\n'
      << "genotypes\t" << m.genotypes << '\n'
      << "coerced\t" << m.coerced << '\n';
  constexpr std::array<const char*, 3> kNames{"unigram", "bigram", "trigram"};
  for (std::size_t n = 1; n <= 3; ++n) {
    out << kNames[n - 1] << '\n';
    for (const auto& [ctx, e] : model.table(n).entries())
      for (const auto& [tagging, count] : e.counts)
        out << render_context(ctx) << '\t' << render_tagging(tagging) << '\t' << count << '\n';
  }
}

inline GenotypeModel read_model(std::istream& in, const std::string& source) {
  GenotypeModel model;
  std::string line;
  std::size_t n = 0;
  std::size_t order = 0;
  bool in_meta = false;
  std::set<std::string> seen_sections;

  auto parse_count = [&](const std::string& s) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw FormatError(source, n, "bad count '" + s + "'");
    return v;
  };

  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == "meta" || line == "unigram" || line == "bigram" || line == "trigram") {
      if (!seen_sections.insert(line).second) throw FormatError(source, n, "duplicate section '" + line + "'");
      in_meta = line == "meta";
      order = line == "unigram" ? 1 : line == "bigram" ? 2 : line == "trigram" ? 3 : 0;
      continue;
    }
    std::vector<std::string> f;
    for (std::size_t start = 0;;) {
      auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (in_meta) {
      if (f.size() != 2) throw FormatError(source, n, "expected 'key<TAB>value'");
      auto& m = model.meta;
      if (f[0] == "space") {
        if (f[1] == "full") m.space = TagSpace::full;
        else if (f[1] == "collapsed") m.space = TagSpace::collapsed;
        else throw FormatError(source, n, "unknown tag space '" + f[1] + "'");
      } else if (f[0] == "sentences") {
        m.sentences = parse_count(f[1]);
      } else if (f[0] == "tokens") {
        m.tokens = parse_count(f[1]);
      } else if (f[0] == "types") {
        m.types = parse_count(f[1]);
      } else if (f[0] == "genotypes") {
        m.genotypes = parse_count(f[1]);
      } else if (f[0] == "coerced") {
        m.coerced = parse_count(f[1]);
      } else {
        throw FormatError(source, n, "unknown meta key '" + f[0] + "'");
      }
      continue;
    }
    if (order == 0) throw FormatError(source, n, "record outside of a section");
    if (f.size() != 3) throw FormatError(source, n, "expected 'context<TAB>tagging<TAB>count'");
    try {
      model.table(order).add(parse_context(f[0]), parse_tagging(f[1]), parse_count(f[2]));
    } catch (const std::invalid_argument& e) {
      throw FormatError(source, n, e.what());
    }
  }
  if (!seen_sections.count("meta")) throw FormatError(source, 0, "missing meta section");
  return model;
}

inline GenotypeModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open model");
  return read_model(in, path);
}

inline void save_model(const std::string& path, const GenotypeModel& model) {
  std::ofstream out(path);
  if (!out) throw FormatError(path, 0, "cannot write model");
  write_model(out, model);
  if (!out) throw FormatError(path, 0, "write failed");
}

}  // namespace fstag
