#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cantor/cantor_approx.hpp"

namespace cantor {

/// Open gap (lo, lo + length). The left end may be an enclosure; the length
/// is exact.
struct Gap {
  RatInterval lo;
  Rational length;

  RatInterval hi() const { return lo + RatInterval(length); }
};

/// Gaps of a construction: the open intervals between consecutive pieces.
inline std::vector<Gap> gaps_of(const CantorApprox& approx) {
  std::vector<Gap> out;
  for (std::size_t i = 0; i < approx.gaps.size(); ++i) {
    if (!approx.gaps[i].exact()) throw InvalidInput("gap lengths must be exact");
    out.push_back({approx.pieces[i].hi, approx.gaps[i].lo()});
  }
  return out;
}

namespace detail {

struct RecoverState {
  const std::vector<Gap>& gaps;
  int resolution;
  std::vector<Rational> values;
  std::vector<RatInterval> residuals;
};

// Assign gaps[first, last) to the subtree rooted at (level, position); the
// subtree spans the region between `left` and `right`.
inline void recover_node(RecoverState& st, std::size_t first, std::size_t last, int level,
                         std::uint64_t position, const RatInterval& left, const RatInterval& right) {
  if (level > st.resolution) {
    const RatInterval len = right - left;
    st.residuals[position] = RatInterval(std::max(len.lo(), Rational(0)), len.hi());
    return;
  }
  if (first == last)
    throw InvalidInput("gaps are not exhaustive to resolution " + std::to_string(st.resolution) +
                       ": no gap for dyadic " +
                       Dyadic(2 * position + 1, level).str());
  std::size_t best = first;
  for (std::size_t i = first + 1; i < last; ++i)
    if (st.gaps[i].length > st.gaps[best].length) best = i;
  st.values[(std::uint64_t{1} << (level - 1)) + position - 1] = st.gaps[best].length;
  recover_node(st, first, best, level + 1, 2 * position, left, st.gaps[best].lo);
  recover_node(st, best + 1, last, level + 1, 2 * position + 1, st.gaps[best].hi(), right);
}

}  // namespace detail

/// Canonical gap function of the set [0, 1] minus `gaps`: the largest gap
/// (ties to the leftmost) goes to 1/2, and each side recurses. Gaps below
/// resolution are absorbed into the residual of their leaf, whose mass is the
/// leaf region's length.
inline GapFunction recover_phi(std::vector<Gap> gaps, int resolution) {
  if (resolution < 1 || resolution > kMaxResolution)
    throw InvalidInput("resolution must lie in [1, " + std::to_string(kMaxResolution) + "]");
  for (const auto& g : gaps)
    if (g.length <= 0) throw InvalidInput("gaps must have positive length");
  std::sort(gaps.begin(), gaps.end(),
            [](const Gap& a, const Gap& b) { return a.lo.mid() < b.lo.mid(); });
  if (!gaps.empty()) {
    if (certainly_less(RatInterval(Rational(0)), gaps.front().lo) != Verdict::True ||
        certainly_less(gaps.back().hi(), RatInterval(Rational(1))) != Verdict::True)
      throw InvalidInput("gaps must lie strictly inside (0, 1)");
  }
  for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
    // Touching gaps would leave an isolated point.
    if (certainly_less(gaps[i].hi(), gaps[i + 1].lo) != Verdict::True)
      throw InvalidInput("gaps " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " overlap or touch");
  }
  const std::uint64_t leaves = std::uint64_t{1} << resolution;
  detail::RecoverState st{gaps, resolution, std::vector<Rational>(leaves - 1),
                          std::vector<RatInterval>(leaves)};
  detail::recover_node(st, 0, gaps.size(), 1, 0, Rational(0), Rational(1));
  return {resolution, std::move(st.values), std::move(st.residuals)};
}

/// Exact-endpoint convenience form: each pair is an open gap (lo, hi).
inline GapFunction recover_phi(const std::vector<std::pair<Rational, Rational>>& gaps, int resolution) {
  std::vector<Gap> converted;
  converted.reserve(gaps.size());
  for (const auto& [lo, hi] : gaps) {
    if (hi <= lo) throw InvalidInput("gap (" + to_string(lo) + ", " + to_string(hi) + ") is empty");
    converted.push_back({lo, hi - lo});
  }
  return recover_phi(std::move(converted), resolution);
}

}  // namespace cantor
