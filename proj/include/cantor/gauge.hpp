#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantor/tree_assign.hpp"

namespace cantor {

/// Continuous nondecreasing piecewise-linear gauge with h(0) = 0. Between
/// knots the function is linear; past the last knot it continues with
/// `tail_slope` (0 makes it constant).
class GaugeFunction {
public:
  struct Knot {
    Rational t;
    Rational value;
  };
  /// Interval on which the gauge is pinned to a constant, n^{-level}.
  struct Plateau {
    int level;
    Rational lo;
    Rational hi;
    Rational value;
  };

  GaugeFunction(std::vector<Knot> knots, Rational tail_slope)
      : knots_(std::move(knots)), tail_slope_(std::move(tail_slope)) {
    if (knots_.empty() || knots_.front().t != 0 || knots_.front().value != 0)
      throw InvalidInput("gauge must start at the knot (0, 0)");
    for (std::size_t i = 1; i < knots_.size(); ++i) {
      if (knots_[i].t <= knots_[i - 1].t) throw InvalidInput("gauge knots must be strictly increasing");
      if (knots_[i].value < knots_[i - 1].value) throw InvalidInput("gauge must be nondecreasing");
    }
    if (tail_slope_ < 0) throw InvalidInput("gauge tail slope must be nonnegative");
  }

  /// h(t) = slope * t.
  static GaugeFunction linear(Rational slope) { return GaugeFunction({{0, 0}}, std::move(slope)); }

  const std::vector<Knot>& knots() const { return knots_; }
  const Rational& tail_slope() const { return tail_slope_; }
  const std::vector<Plateau>& plateaus() const { return plateaus_; }
  std::optional<int> branching() const { return branching_; }

  Rational operator()(const Rational& t) const {
    if (t < 0) throw InvalidInput("gauge argument must be nonnegative");
    // First knot strictly beyond t.
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                               [](const Rational& x, const Knot& k) { return x < k.t; });
    const Knot& left = *(it - 1);
    if (it == knots_.end()) return left.value + tail_slope_ * (t - left.t);
    const Knot& right = *it;
    return left.value + (right.value - left.value) * (t - left.t) / (right.t - left.t);
  }

  /// Monotone, so the image of [lo, hi] is [h(lo), h(hi)].
  RatInterval operator()(const RatInterval& t) const {
    if (t.exact()) return (*this)(t.lo());
    return {(*this)(t.lo()), (*this)(t.hi())};
  }

private:
  friend GaugeFunction synth_gauge(const DiameterProfile&, int);

  std::vector<Knot> knots_;
  Rational tail_slope_;
  std::vector<Plateau> plateaus_;
  std::optional<int> branching_;
};

/// Gauge equal to n^{-k} on [m_k, M_k] for each stored level, linear between
/// consecutive plateaus and from the origin up to the deepest plateau, and
/// constant n^{-1} past M_1. Enclosed m_k, M_k widen the plateau to
/// [lo(m_k), hi(M_k)], which still contains the true values.
inline GaugeFunction synth_gauge(const DiameterProfile& profile, int branching) {
  if (branching < 2) throw InvalidInput("branching must be at least 2");
  if (profile.depth() < 1) throw InvalidInput("diameter profile is empty");
  int failing = 0;
  switch (check_regular(profile, &failing)) {
    case Verdict::True: break;
    case Verdict::False:
      throw PreconditionError("profile is not regular: M_" + std::to_string(failing + 1) +
                              " >= m_" + std::to_string(failing) + ", plateaus would overlap");
    case Verdict::Inconclusive:
      throw Inconclusive("cannot certify M_" + std::to_string(failing + 1) + " < m_" +
                         std::to_string(failing));
  }
  if (profile.m(profile.depth()).lo() <= 0) throw PreconditionError("deepest diameter must be positive");

  std::vector<GaugeFunction::Plateau> plateaus;
  std::vector<GaugeFunction::Knot> knots{{0, 0}};
  Rational value = 1;
  std::vector<Rational> level_value;
  for (int k = 1; k <= profile.depth(); ++k) {
    value /= branching;
    level_value.push_back(value);
  }
  for (int k = profile.depth(); k >= 1; --k) {
    const Rational& v = level_value[static_cast<std::size_t>(k - 1)];
    const Rational lo = profile.m(k).lo();
    const Rational hi = profile.M(k).hi();
    knots.push_back({lo, v});
    if (hi != lo) knots.push_back({hi, v});
    plateaus.push_back({k, lo, hi, v});
  }
  GaugeFunction h(std::move(knots), Rational(0));
  h.plateaus_ = std::move(plateaus);
  h.branching_ = branching;
  return h;
}

inline RatInterval eval_gauge(const GaugeFunction& h, const RatInterval& t) {
  if (t.lo() < 0) throw InvalidInput("gauge argument must be nonnegative");
  return h(t);
}

}  // namespace cantor
