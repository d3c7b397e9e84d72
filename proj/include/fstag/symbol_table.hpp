#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fstag {

using Label = std::int32_t;
inline constexpr Label kEpsilon = 0;
inline constexpr Label kNoLabel = -1;

/// Bidirectional string <-> id map. Id 0 is always "<eps>".
class SymbolTable {
 public:
  static constexpr std::string_view kEpsilonSymbol = "<eps>";

  SymbolTable() { names_.emplace_back(kEpsilonSymbol); index_.emplace(kEpsilonSymbol, kEpsilon); }

  /// Returns the id of `symbol`, assigning the next free id if new.
  Label add(std::string_view symbol) {
    if (auto it = index_.find(std::string(symbol)); it != index_.end()) return it->second;
    auto id = static_cast<Label>(names_.size());
    names_.emplace_back(symbol);
    index_.emplace(std::string(symbol), id);
    return id;
  }

  /// Binds `symbol` to an explicit id (used when reading serialized tables).
  void add(std::string_view symbol, Label id) {
    if (id < 0) throw std::invalid_argument("negative symbol id");
    if (id == kEpsilon) {
      if (symbol != kEpsilonSymbol && symbol != "<epsilon>" && symbol != "eps")
        throw std::invalid_argument("symbol id 0 is reserved for epsilon");
      return;
    }
    if (auto it = index_.find(std::string(symbol)); it != index_.end()) {
      if (it->second != id) throw std::invalid_argument("symbol '" + std::string(symbol) + "' bound twice");
      return;
    }
    if (static_cast<std::size_t>(id) < names_.size() && !names_[id].empty())
      throw std::invalid_argument("symbol id " + std::to_string(id) + " bound twice");
    if (static_cast<std::size_t>(id) >= names_.size()) names_.resize(id + 1);
    names_[id] = std::string(symbol);
    index_.emplace(std::string(symbol), id);
  }

  std::optional<Label> find(std::string_view symbol) const {
    auto it = index_.find(std::string(symbol));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Like find(), but throws when the symbol is absent.
  Label id(std::string_view symbol) const {
    if (auto l = find(symbol)) return *l;
    throw std::out_of_range("unknown symbol '" + std::string(symbol) + "'");
  }

  const std::string& symbol(Label id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= names_.size())
      throw std::out_of_range("symbol id " + std::to_string(id) + " out of range");
    return names_[id];
  }

  bool contains(Label id) const {
    return id >= 0 && static_cast<std::size_t>(id) < names_.size() && !names_[id].empty();
  }

  /// One past the largest id.
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Label> index_;
};

}  // namespace fstag
