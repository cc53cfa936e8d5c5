#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/dyadic.hpp"
#include "cantor/gap_sequence.hpp"
#include "cantor/interval.hpp"

namespace cantor {

inline constexpr int kMaxResolution = 20;

/// Gap function truncated at resolution R: the gap mass phi(d) of every
/// dyadic d of level <= R, plus the mass hidden below each of the 2^R leaves.
/// The hidden mass of a leaf equals the length of its depth-R construction
/// piece (the set has Lebesgue measure zero).
///
/// Masses are laid out left to right as
///   leaf_0, gap(1/2^R), leaf_1, gap(2/2^R), ..., leaf_{2^R - 1}
/// and prefix sums of that sequence give every depth-<=R endpoint.
class GapFunction {
public:
  /// `values[i - 1]` is the mass at breadth-first index i (1/2, 1/4, 3/4, ...).
  GapFunction(int resolution, std::vector<Rational> values, std::vector<RatInterval> residuals)
      : resolution_(resolution), values_(std::move(values)), residuals_(std::move(residuals)) {
    if (resolution_ < 1 || resolution_ > kMaxResolution)
      throw InvalidInput("resolution must lie in [1, " + std::to_string(kMaxResolution) + "]");
    const std::uint64_t leaves = std::uint64_t{1} << resolution_;
    if (values_.size() != leaves - 1)
      throw InvalidInput("expected " + std::to_string(leaves - 1) + " gap values, got " +
                         std::to_string(values_.size()));
    if (residuals_.size() != leaves)
      throw InvalidInput("expected " + std::to_string(leaves) + " residuals, got " +
                         std::to_string(residuals_.size()));
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (values_[i] <= 0)
        throw InvalidInput("gap mass at " + Dyadic::from_index(i + 1).str() + " must be positive");
    for (const auto& r : residuals_)
      if (r.lo() < 0) throw InvalidInput("residual masses must be nonnegative");
    build_prefix();
    if (!total_mass().contains(Rational(1)))
      throw InvalidInput("total gap mass " + to_string(total_mass()) +
                         " is not 1 (positive-measure sets are not supported)");
  }

  int resolution() const { return resolution_; }
  std::uint64_t leaf_count() const { return residuals_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const std::vector<RatInterval>& residuals() const { return residuals_; }
  const RatInterval& residual(std::uint64_t leaf) const { return residuals_.at(leaf); }
  bool exact() const {
    for (const auto& r : residuals_)
      if (!r.exact()) return false;
    return true;
  }

  const Rational& value(const Dyadic& d) const {
    if (d.level() > resolution_)
      throw ResolutionError("dyadic " + d.str() + " lies below resolution " +
                                std::to_string(resolution_),
                            d.level());
    return values_[d.breadth_first_index() - 1];
  }

  RatInterval total_mass() const { return {prefix_lo_.back(), prefix_hi_.back()}; }

  /// Enclosure of the sum of the first `count` masses in layout order. The
  /// known total of 1 tightens it from the right.
  RatInterval prefix_mass(std::size_t count) const {
    if (count == 0) return Rational(0);
    if (count == prefix_lo_.size() - 1) return Rational(1);
    const std::size_t n = prefix_lo_.size() - 1;
    Rational lo = prefix_lo_[count];
    Rational hi = prefix_hi_[count];
    const Rational from_right_lo = 1 - (prefix_hi_[n] - prefix_hi_[count]);
    const Rational from_right_hi = 1 - (prefix_lo_[n] - prefix_lo_[count]);
    if (from_right_lo > lo) lo = from_right_lo;
    if (from_right_hi < hi) hi = from_right_hi;
    return {lo, hi};
  }

  /// Enclosure of the masses with layout positions in [first, last).
  RatInterval mass_between(std::size_t first, std::size_t last) const {
    return {prefix_lo_[last] - prefix_lo_[first], prefix_hi_[last] - prefix_hi_[first]};
  }

private:
  void build_prefix() {
    const std::size_t n = 2 * residuals_.size() - 1;
    prefix_lo_.assign(n + 1, Rational(0));
    prefix_hi_.assign(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (i % 2 == 0) {
        prefix_lo_[i + 1] = prefix_lo_[i] + residuals_[i / 2].lo();
        prefix_hi_[i + 1] = prefix_hi_[i] + residuals_[i / 2].hi();
      } else {
        const auto& v = values_[Dyadic::reduce((i + 1) / 2, resolution_).breadth_first_index() - 1];
        prefix_lo_[i + 1] = prefix_lo_[i] + v;
        prefix_hi_[i + 1] = prefix_hi_[i] + v;
      }
    }
  }

  int resolution_;
  std::vector<Rational> values_;
  std::vector<RatInterval> residuals_;
  std::vector<Rational> prefix_lo_;
  std::vector<Rational> prefix_hi_;
};

/// phi((2s+1)/2^j) = alpha(2^{j-1} + s) on levels <= R, with the mass of each
/// leaf's subtree as its residual.
inline GapFunction phi_from_alpha(const GapSequence& alpha, int resolution) {
  if (resolution < 1 || resolution > kMaxResolution)
    throw InvalidInput("resolution must lie in [1, " + std::to_string(kMaxResolution) + "]");
  const std::uint64_t leaves = std::uint64_t{1} << resolution;
  if (alpha.known_terms() != 0 && alpha.known_terms() < leaves - 1)
    throw ResolutionError("gap sequence prefix has " + std::to_string(alpha.known_terms()) +
                              " terms; resolution " + std::to_string(resolution) + " needs " +
                              std::to_string(leaves - 1),
                          resolution);
  std::vector<Rational> values;
  values.reserve(leaves - 1);
  if (alpha.is_geometric()) {
    const Rational& r = alpha.ratio();
    Rational term = 1 - r;
    for (std::uint64_t i = 1; i < leaves; ++i, term *= r) values.push_back(term);
  } else {
    for (std::uint64_t i = 1; i < leaves; ++i) values.push_back(alpha.term(i));
  }
  std::vector<RatInterval> residuals;
  residuals.reserve(leaves);
  for (std::uint64_t p = 0; p < leaves; ++p) residuals.push_back(alpha.leaf_tail(resolution, p));
  return {resolution, std::move(values), std::move(residuals)};
}

/// Middle-thirds set: gaps of length 3^{-j} at level j, leaves of length 3^{-R}.
inline GapFunction middle_thirds(int resolution) {
  if (resolution < 1 || resolution > kMaxResolution)
    throw InvalidInput("resolution must lie in [1, " + std::to_string(kMaxResolution) + "]");
  const std::uint64_t leaves = std::uint64_t{1} << resolution;
  std::vector<Rational> values;
  values.reserve(leaves - 1);
  for (std::uint64_t i = 1; i < leaves; ++i)
    values.push_back(Rational(1) / pow(Rational(3), Dyadic::from_index(i).level()));
  std::vector<RatInterval> residuals(leaves, RatInterval(Rational(1) / pow(Rational(3), resolution)));
  return {resolution, std::move(values), std::move(residuals)};
}

/// Phi(q / 2^level) for 0 <= q <= 2^level and level <= R: the gap mass to
/// the left of that point. Phi(0) = 0 and Phi(1) = 1 by convention.
inline RatInterval cumulative_phi_at(const GapFunction& phi, std::uint64_t q, int level) {
  if (level > phi.resolution())
    throw ResolutionError("point lies below resolution " + std::to_string(phi.resolution()), level);
  if (q > (std::uint64_t{1} << level)) throw InvalidInput("point outside [0, 1]");
  const std::uint64_t grid = q << (phi.resolution() - level);
  if (grid == 0) return Rational(0);
  // The gap at grid point g sits at layout position 2g - 1.
  return phi.prefix_mass(2 * grid - 1);
}

/// Phi(d) = sum of phi(d') over dyadics d' < d.
inline RatInterval cumulative_phi(const GapFunction& phi, const Dyadic& d) {
  if (d.level() > phi.resolution())
    throw ResolutionError("dyadic " + d.str() + " lies below resolution " +
                              std::to_string(phi.resolution()),
                          d.level());
  return cumulative_phi_at(phi, d.numerator(), d.level());
}

}  // namespace cantor
