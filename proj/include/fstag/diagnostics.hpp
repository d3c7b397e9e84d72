#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fstag/corpus.hpp"
#include "fstag/format.hpp"
#include "fstag/ngram_model.hpp"

namespace fstag {

struct CoverageRow {
  std::uint64_t total = 0;
  std::uint64_t seen = 0;

  double fraction() const { return total ? static_cast<double>(seen) / static_cast<double>(total) : 0.0; }
};

/// Rows for orders 1, 2, 3.
struct CoverageReport {
  std::array<CoverageRow, 3> rows;

  const CoverageRow& order(std::size_t n) const { return rows.at(n - 1); }
};

/// Share of the test corpus's n-gram genotype occurrences whose context was
/// seen in training. Windows stay inside a sentence; genotypes come from the
/// lexicon alone, as at tagging time.
inline CoverageReport coverage(const GenotypeModel& model, const TaggedCorpus& test, const Lexicon& lex,
                               const WeightConfig& cfg) {
  CoverageReport r;
  for (const auto& s : test) {
    std::vector<Genotype> g;
    for (const auto& t : s.tokens) g.push_back(genotype_of(make_token(t.surface), lex, cfg, model.space()));
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t i = 0; i + n <= g.size(); ++i) {
        Context ctx(g.begin() + static_cast<std::ptrdiff_t>(i), g.begin() + static_cast<std::ptrdiff_t>(i + n));
        auto& row = r.rows[n - 1];
        ++row.total;
        if (model.table(n).contains(ctx)) ++row.seen;
      }
  }
  return r;
}

inline std::string render_coverage(const CoverageReport& r) {
  std::vector<std::vector<std::string>> rows{{"", "test corpus", "training corpus", ""},
                                             {"", "# of genotypes", "# of genotypes", "accuracy"}};
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto& row = r.order(n);
    rows.push_back({std::to_string(n) + "-grams", std::to_string(row.total), std::to_string(row.seen),
                    "(" + fixed(100.0 * row.fraction(), 1) + " %)"});
  }
  return render_table(rows);
}

enum class FocusPosition { none, left, middle, right };

inline std::string_view to_string(FocusPosition p) {
  switch (p) {
    case FocusPosition::left: return "Left";
    case FocusPosition::middle: return "Middle";
    case FocusPosition::right: return "Right";
    default: return "";
  }
}

struct ContextRow {
  std::size_t order = 1;
  FocusPosition position = FocusPosition::none;
  Context context;
  std::size_t focus_index = 0;
  std::vector<std::pair<Tagging, std::uint64_t>> taggings;
  /// Focus tag with the largest count in this context (ties: smallest tag).
  std::string decision;
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
};

struct ContextReport {
  Genotype focus;
  std::vector<ContextRow> rows;

  std::uint64_t correct(std::size_t order) const { return sum(order, &ContextRow::correct); }
  std::uint64_t total(std::size_t order) const { return sum(order, &ContextRow::total); }
  std::uint64_t total(std::size_t order, FocusPosition p) const {
    std::uint64_t s = 0;
    for (const auto& r : rows)
      if (r.order == order && r.position == p) s += r.total;
    return s;
  }
  double accuracy(std::size_t order) const {
    auto t = total(order);
    return t ? static_cast<double>(correct(order)) / static_cast<double>(t) : 0.0;
  }

 private:
  std::uint64_t sum(std::size_t order, std::uint64_t ContextRow::*field) const {
    std::uint64_t s = 0;
    for (const auto& r : rows)
      if (r.order == order) s += r.*field;
    return s;
  }
};

/// Decision table for one genotype: every seen context containing it (first
/// occurrence only, boundary contexts skipped), the tag a per-context
/// majority vote would choose and how often that choice is right.
inline ContextReport context_report(const GenotypeModel& model, const Genotype& focus) {
  ContextReport report{focus, {}};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& [ctx, entry] : model.table(n).entries()) {
      bool boundary = false;
      for (const auto& g : ctx) boundary = boundary || g.is_boundary();
      if (boundary) continue;
      auto at = std::find(ctx.begin(), ctx.end(), focus);
      if (at == ctx.end()) continue;
      ContextRow row;
      row.order = n;
      row.context = ctx;
      row.focus_index = static_cast<std::size_t>(at - ctx.begin());
      if (n == 1) row.position = FocusPosition::none;
      else if (row.focus_index == 0) row.position = FocusPosition::left;
      else if (row.focus_index + 1 == n) row.position = FocusPosition::right;
      else row.position = FocusPosition::middle;
      std::map<std::string, std::uint64_t> marginal;
      for (const auto& [tagging, count] : entry.counts) {
        row.taggings.emplace_back(tagging, count);
        marginal[tagging[row.focus_index]] += count;
      }
      for (const auto& [tag, count] : marginal)
        if (count > row.correct) {
          row.correct = count;
          row.decision = tag;
        }
      row.total = entry.total;
      report.rows.push_back(std::move(row));
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ContextRow& a, const ContextRow& b) {
    return std::pair(a.order, a.position) < std::pair(b.order, b.position);
  });
  return report;
}

inline std::string_view order_name(std::size_t n) {
  return n == 1 ? "Unigram" : n == 2 ? "Bigram" : "Trigram";
}

/// One line per tagging, grouped by order, focus position and context.
inline std::string render_context_detail(const ContextReport& r) {
  std::vector<std::vector<std::string>> rows{
      {"n-gram", "pos.", "total", "genotype", "decision", "distr.", "correct", "total"}};
  std::size_t last_order = 0;
  FocusPosition last_pos = FocusPosition::none;
  for (const auto& row : r.rows) {
    bool new_order = row.order != last_order;
    bool new_pos = new_order || row.position != last_pos;
    for (std::size_t k = 0; k < row.taggings.size(); ++k) {
      const auto& [tagging, count] = row.taggings[k];
      std::vector<std::string> line(8);
      if (k == 0) {
        if (new_order) line[0] = std::string(order_name(row.order));
        if (new_pos) {
          line[1] = std::string(to_string(row.position));
          line[2] = std::to_string(r.total(row.order, row.position));
        }
        line[3] = render_context(row.context);
        line[6] = std::to_string(row.correct);
        line[7] = std::to_string(row.total);
      }
      std::string t = render_tagging(tagging);
      line[4] = (tagging[row.focus_index] == row.decision ? "*" : " ") + t;
      line[5] = std::to_string(count);
      rows.push_back(std::move(line));
    }
    last_order = row.order;
    last_pos = row.position;
  }
  return render_table(rows);
}

inline std::string render_context_summary(const ContextReport& r) {
  std::vector<std::vector<std::string>> rows{{"n-gram", "cor.", "total", "accuracy"}};
  for (std::size_t n = 1; n <= 3; ++n)
    rows.push_back({std::string(order_name(n)), std::to_string(r.correct(n)), std::to_string(r.total(n)),
                    percent(r.accuracy(n))});
  return render_table(rows);
}

inline std::string render_corpus_stats(const std::string& name, const ModelMeta& m) {
  return render_table({{"Corpora", "# of tokens", "# of types", "# of genotypes"},
                       {name, std::to_string(m.tokens), std::to_string(m.types), std::to_string(m.genotypes)}});
}

}  // namespace fstag
