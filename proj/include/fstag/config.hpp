#pragma once

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>

#include "fstag/error.hpp"
#include "fstag/weight.hpp"

namespace fstag {

/// Costs for analyses the lexicon cannot vouch for, and the constraint
/// violation penalty. Must satisfy 0 < w_proper <= w_acronym < w_unk < w_neg.
struct WeightConfig {
  double w_proper = 2.0;
  double w_acronym = 5.0;
  double w_unk = 100.0;
  double w_neg = 1000.0;

  void validate() const {
    if (!(0.0 < w_proper && w_proper <= w_acronym && w_acronym < w_unk && w_unk < w_neg))
      throw std::invalid_argument("weight config must satisfy 0 < w_proper <= w_acronym < w_unk < w_neg");
  }
};

/// Applies `key=value` lines over `cfg`. '#' starts a comment.
inline WeightConfig parse_config(std::istream& in, const std::string& source, WeightConfig cfg = {}) {
  std::string line;
  std::size_t n = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++n;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError(source, n, "expected key=value");
    std::string key = trim(line.substr(0, eq));
    double value = 0;
    try {
      value = parse_weight(trim(line.substr(eq + 1))).value();
    } catch (const std::exception& e) {
      throw FormatError(source, n, e.what());
    }
    if (key == "w_proper") cfg.w_proper = value;
    else if (key == "w_acronym") cfg.w_acronym = value;
    else if (key == "w_unk") cfg.w_unk = value;
    else if (key == "w_neg") cfg.w_neg = value;
    else throw FormatError(source, n, "unknown key '" + key + "'");
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(source, 0, e.what());
  }
  return cfg;
}

inline WeightConfig load_config(const std::string& path, WeightConfig cfg = {}) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open config");
  return parse_config(in, path, cfg);
}

}  // namespace fstag
