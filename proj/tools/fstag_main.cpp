#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fstag/fstag.hpp"

namespace {

using namespace fstag;

std::string read_text(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError(path, 0, "cannot open input");
    buf << in.rdbuf();
  }
  return buf.str();
}

struct Common {
  ResourcePaths paths;

  void tagset(CLI::App* cmd) {
    cmd->add_option("--tagset", paths.tagset, "full<TAB>short tag list")->required()->check(CLI::ExistingFile);
  }
  void lexicon(CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--lexicon", paths.lexicon, "surface<TAB>tag[<TAB>weight] lexicon");
    if (required) o->required();
  }
  void rules(CLI::App* cmd) { cmd->add_option("--rules", paths.rules, "negative constraint rules"); }
  void model(CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--model", paths.model, "model file written by train");
    if (required) o->required();
  }
  void config(CLI::App* cmd) { cmd->add_option("--config", paths.config, "key=value weight overrides"); }
};

int run(int argc, char** argv) {
  CLI::App app{"Part-of-speech tagger built from weighted finite-state transducers"};
  app.require_subcommand(1);
  Common c;

  // train
  auto* train_cmd = app.add_subcommand("train", "count genotype n-grams in a tagged corpus");
  std::string corpus_path, out_path, space_name = "collapsed", corpus_name;
  bool strict = false;
  train_cmd->add_option("--corpus", corpus_path, "token<TAB>tag corpus")->required();
  train_cmd->add_option("--out", out_path, "model file to write")->required();
  train_cmd->add_option("--space", space_name, "tag space of the statistics")
      ->check(CLI::IsMember({"full", "collapsed"}));
  train_cmd->add_option("--name", corpus_name, "corpus label in the summary");
  train_cmd->add_flag("--strict", strict, "fail on gold tags outside the token's genotype");
  c.tagset(train_cmd);
  c.lexicon(train_cmd, true);
  c.config(train_cmd);

  // tag
  auto* tag_cmd = app.add_subcommand("tag", "tag raw text");
  std::string mode_name = "full", input = "-", compounds_path;
  bool show_cost = false;
  tag_cmd->add_option("--mode", mode_name, "unigram, bigram or full")
      ->check(CLI::IsMember({"unigram", "bigram", "full"}));
  tag_cmd->add_option("--input", input, "text file, - for stdin");
  tag_cmd->add_option("--compounds", compounds_path, "multiword units, one per line");
  tag_cmd->add_flag("--show-cost", show_cost, "print each token's path cost");
  c.tagset(tag_cmd);
  c.lexicon(tag_cmd, true);
  c.rules(tag_cmd);
  c.model(tag_cmd, true);
  c.config(tag_cmd);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "accuracy of the three modes on a gold corpus");
  std::string gold_path;
  bool count_punct = false;
  std::size_t top_errors = 10;
  eval_cmd->add_option("--gold", gold_path, "token<TAB>tag gold corpus")->required();
  eval_cmd->add_flag("--count-punct", count_punct, "also report accuracy with punctuation counted");
  eval_cmd->add_option("--errors", top_errors, "number of confusion pairs to list");
  c.tagset(eval_cmd);
  c.lexicon(eval_cmd, true);
  c.rules(eval_cmd);
  c.model(eval_cmd, true);
  c.config(eval_cmd);

  // inspect
  auto* inspect_cmd = app.add_subcommand("inspect", "state and arc counts of the resource machines");
  c.tagset(inspect_cmd);
  c.lexicon(inspect_cmd, false);
  c.rules(inspect_cmd);
  c.model(inspect_cmd, false);
  c.config(inspect_cmd);

  // coverage
  auto* cov_cmd = app.add_subcommand("coverage", "share of test n-gram genotypes seen in training");
  std::string test_path;
  cov_cmd->add_option("--test", test_path, "token<TAB>tag test corpus")->required();
  c.tagset(cov_cmd);
  c.lexicon(cov_cmd, true);
  c.model(cov_cmd, true);
  c.config(cov_cmd);

  // context
  auto* ctx_cmd = app.add_subcommand("context", "decision table for one genotype");
  std::string genotype_text;
  ctx_cmd->add_option("--genotype", genotype_text, "genotype such as \"[JMP NMP]\"")->required();
  ctx_cmd->add_option("--model", c.paths.model, "model file written by train")->required();

  // profile
  auto* prof_cmd = app.add_subcommand("profile", "lexical ambiguity of raw text");
  prof_cmd->add_option("--input", input, "text file, - for stdin");
  prof_cmd->add_option("--compounds", compounds_path, "multiword units, one per line");
  c.tagset(prof_cmd);
  c.lexicon(prof_cmd, true);
  c.config(prof_cmd);

  CLI11_PARSE(app, argc, argv);

  if (*ctx_cmd) {
    auto model = load_model(c.paths.model);
    auto report = context_report(model, Genotype::parse(genotype_text));
    if (report.rows.empty()) {
      std::cout << "no context contains " << report.focus.render() << '\n';
      return 0;
    }
    std::cout << render_context_detail(report) << '\n' << render_context_summary(report);
    return 0;
  }

  Resources res = load_resources(c.paths);

  if (*train_cmd) {
    TrainOptions opt;
    opt.space = space_name == "full" ? TagSpace::full : TagSpace::collapsed;
    opt.strict = strict;
    opt.warnings = &std::cerr;
    auto corpus = load_tagged_corpus(corpus_path, res.tags.get());
    GenotypeModel model;
    try {
      model = train(corpus, *res.lexicon, res.cfg, opt);
    } catch (const std::invalid_argument& e) {
      throw FormatError(corpus_path, 0, e.what());
    }
    save_model(out_path, model);
    if (corpus_name.empty()) corpus_name = std::filesystem::path(corpus_path).stem().string();
    std::cout << render_corpus_stats(corpus_name, model.meta);
    return 0;
  }

  CompoundSet compounds;
  if (!compounds_path.empty()) compounds = load_compounds(compounds_path);

  if (*tag_cmd) {
    Mode mode = parse_mode(mode_name);
    bool first = true;
    for (const auto& s : tokenize(read_text(input), compounds)) {
      if (!first) std::cout << '\n';
      first = false;
      write_tagged(std::cout, tag_sentence(s, res, mode), show_cost);
    }
    return 0;
  }

  if (*eval_cmd) {
    auto gold = load_tagged_corpus(gold_path, res.tags.get());
    EvalReport rep;
    try {
      rep = evaluate(gold, res);
    } catch (const std::out_of_range& e) {
      throw FormatError(gold_path, 0, e.what());
    }
    std::cout << render_eval(rep, std::filesystem::path(gold_path).stem().string(), count_punct, top_errors);
    return 0;
  }

  if (*inspect_cmd) {
    std::cout << render_inspect(inspect(res));
    return 0;
  }

  if (*cov_cmd) {
    auto test = load_tagged_corpus(test_path, res.tags.get());
    std::cout << render_coverage(coverage(res.model, test, *res.lexicon, res.cfg));
    return 0;
  }

  if (*prof_cmd) {
    auto p = ambiguity_profile(tokenize(read_text(input), compounds), *res.lexicon, res.cfg);
    std::vector<std::vector<std::string>> rows{{"readings", "tokens", "share"}};
    for (std::size_t b = 0; b < p.counts.size(); ++b)
      rows.push_back({AmbiguityProfile::kBuckets[b], std::to_string(p.counts[b]), percent(p.fraction(b))});
    std::cout << render_table(rows);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "fstag: error: " << e.what() << '\n';
    return 1;
  }
}
