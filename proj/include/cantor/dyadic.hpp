#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "cantor/rational.hpp"

namespace cantor {

inline constexpr int kMaxLevel = 62;

/// Dyadic rational numerator / 2^level in (0, 1) in lowest terms.
class Dyadic {
public:
  Dyadic(std::uint64_t numerator, int level) : num_(numerator), level_(level) {
    if (level < 1 || level > kMaxLevel) throw InvalidInput("dyadic level out of range");
    if (numerator % 2 == 0) throw InvalidInput("dyadic numerator must be odd");
    if (numerator >= (std::uint64_t{1} << level))
      throw InvalidInput("dyadic numerator must be below 2^level");
  }

  /// Inverse of breadth_first_index: 1 -> 1/2, 2 -> 1/4, 3 -> 3/4, ...
  static Dyadic from_index(std::uint64_t index) {
    if (index == 0) throw InvalidInput("dyadic index starts at 1");
    const int level = std::bit_width(index);
    const std::uint64_t s = index - (std::uint64_t{1} << (level - 1));
    return {2 * s + 1, level};
  }

  /// Reduces q/2^level (0 < q < 2^level) to lowest terms.
  static Dyadic reduce(std::uint64_t q, int level) {
    if (q == 0) throw InvalidInput("dyadic must be positive");
    const int tz = std::countr_zero(q);
    return {q >> tz, level - tz};
  }

  std::uint64_t numerator() const { return num_; }
  int level() const { return level_; }

  /// Position in breadth-first left-to-right order, starting at 1:
  /// (2s+1)/2^j has index 2^{j-1} + s.
  std::uint64_t breadth_first_index() const {
    return (std::uint64_t{1} << (level_ - 1)) + (num_ - 1) / 2;
  }

  /// Numerator on the grid of spacing 2^{-level}, level >= this->level().
  std::uint64_t grid_position(int level) const { return num_ << (level - level_); }

  Rational value() const { return Rational(Integer(num_), Integer(1) << level_); }

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int level = std::max(a.level_, b.level_);
    return a.grid_position(level) <=> b.grid_position(level);
  }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << level_);
  }

private:
  std::uint64_t num_;
  int level_;
};

}  // namespace cantor
