#pragma once

#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "cantor/gauge.hpp"

namespace cantor {

/// Anything that maps a diameter enclosure to an enclosure of h(diameter).
template <typename G>
concept Gauge = requires(const G& g, const RatInterval& t) {
  { g(t) } -> std::convertible_to<RatInterval>;
};

/// Sum of h(diam f(sigma)) over the level-k intervals.
template <Gauge G>
RatInterval natural_cover_sum(const TAssignment& a, const G& h, int k) {
  if (k < 1 || k > a.depth()) throw ResolutionError("level " + std::to_string(k) + " is not stored", k);
  RatInterval sum(Rational(0));
  for (const auto& s : a.level(k)) sum += h(s.length);
  return sum;
}

/// j0 is the least integer with n^{j0} > l, and c = n^{-j0-1}.
struct CertifiedConstant {
  int j0;
  Rational c;
};

inline CertifiedConstant certified_constant(int n, int l) {
  if (n < 2) throw InvalidInput("branching must be at least 2");
  if (l < 2) throw InvalidInput("l must be at least 2");
  int j0 = 0;
  Integer power = 1;
  while (power <= l) {
    power *= n;
    ++j0;
  }
  return {j0, Rational(Integer(1), power * n)};
}

/// Result of the run-cover minimisation: an enclosure of the minimum and the
/// runs (inclusive piece index ranges) of a cover attaining the upper end.
struct CoverResult {
  RatInterval value;
  Rational delta;
  int depth;
  std::vector<std::pair<std::size_t, std::size_t>> runs;
};

/// Minimum of sum h(diam) over covers of the pieces by open hulls of
/// contiguous runs of pieces with diameter at most `delta`, by shortest path
/// over piece boundaries. Lower and upper ends of every enclosure are
/// minimised independently.
template <Gauge G>
CoverResult min_cover_oracle(const CantorApprox& target, const G& h, const Rational& delta) {
  if (delta <= 0) throw InvalidInput("delta must be positive");
  const std::size_t count = target.pieces.size();
  if (count == 0) throw InvalidInput("cover target is empty");
  const RatInterval cap(delta);

  std::vector<Rational> best_lo(count + 1), best_hi(count + 1);
  std::vector<std::size_t> from(count + 1, 0);
  std::vector<bool> reached(count + 1, false);
  reached[0] = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (!reached[i]) throw InfeasibleError("no admissible run ends at piece " + std::to_string(i));
    RatInterval diam = target.pieces[i].length;
    switch (certainly_leq(diam, cap)) {
      case Verdict::True: break;
      case Verdict::False:
        throw InfeasibleError("piece " + std::to_string(i) + " is wider than delta " + to_string(delta));
      case Verdict::Inconclusive:
        throw Inconclusive("cannot compare piece " + std::to_string(i) + " with delta");
    }
    for (std::size_t j = i; j < count; ++j) {
      if (j > i) diam += target.gaps[j - 1] + target.pieces[j].length;
      const Verdict fits = certainly_leq(diam, cap);
      if (fits == Verdict::False) break;
      if (fits == Verdict::Inconclusive)
        throw Inconclusive("cannot compare run " + std::to_string(i) + ".." + std::to_string(j) +
                           " with delta");
      const RatInterval w = h(diam);
      const Rational lo = best_lo[i] + w.lo();
      const Rational hi = best_hi[i] + w.hi();
      if (!reached[j + 1] || lo < best_lo[j + 1]) best_lo[j + 1] = lo;
      if (!reached[j + 1] || hi < best_hi[j + 1]) {
        best_hi[j + 1] = hi;
        from[j + 1] = i;
      }
      reached[j + 1] = true;
    }
  }
  CoverResult out{{best_lo[count], best_hi[count]}, delta, target.depth, {}};
  for (std::size_t j = count; j > 0; j = from[j]) out.runs.emplace_back(from[j], j - 1);
  std::reverse(out.runs.begin(), out.runs.end());
  return out;
}

}  // namespace cantor
