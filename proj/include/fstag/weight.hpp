#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace fstag {

/// Semiring requirements used by the generic machine algorithms.
template <class W>
concept Semiring = requires(const W& a, const W& b) {
  { plus(a, b) } -> std::same_as<W>;
  { times(a, b) } -> std::same_as<W>;
  { W::zero() } -> std::same_as<W>;
  { W::one() } -> std::same_as<W>;
  { a == b } -> std::convertible_to<bool>;
};

/// A semiring whose plus selects one of its operands, so paths can be
/// ranked by a total order on weights.
template <class W>
concept PathSemiring = Semiring<W> && requires(const W& a) {
  { a.value() } -> std::convertible_to<double>;
};

/// Tropical semiring over costs: plus = min, times = +, zero = +inf, one = 0.
/// Lower is better.
class TropicalWeight {
 public:
  constexpr TropicalWeight() = default;
  constexpr explicit TropicalWeight(double value) : value_(value) {}

  static constexpr TropicalWeight zero() {
    return TropicalWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr TropicalWeight one() { return TropicalWeight(0.0); }

  constexpr double value() const { return value_; }
  constexpr bool is_zero() const {
    return value_ == std::numeric_limits<double>::infinity();
  }

  friend constexpr TropicalWeight plus(TropicalWeight a, TropicalWeight b) {
    return a.value_ <= b.value_ ? a : b;
  }
  friend constexpr TropicalWeight times(TropicalWeight a, TropicalWeight b) {
    return TropicalWeight(a.value_ + b.value_);
  }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) = default;
  friend constexpr auto operator<=>(TropicalWeight a, TropicalWeight b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_ = 0.0;
};

/// Shortest round-trippable rendering; +inf is written as "inf".
inline std::string to_string(TropicalWeight w) {
  if (w.is_zero()) return "inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), w.value());
  if (ec != std::errc{}) throw std::runtime_error("weight formatting failed");
  return std::string(buf, end);
}

inline TropicalWeight parse_weight(std::string_view text) {
  if (text == "inf" || text == "Infinity" || text == "+inf")
    return TropicalWeight::zero();
  double v = 0.0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw std::invalid_argument("bad weight '" + std::string(text) + "'");
  return TropicalWeight(v);
}

}  // namespace fstag
