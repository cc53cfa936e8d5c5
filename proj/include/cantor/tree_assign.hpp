#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cantor/cantor_approx.hpp"

namespace cantor {

/// Finite n-Cantor tree truncated at `depth`: every node above the bottom
/// level has exactly `branching` children.
struct CantorTree {
  int branching = 2;
  int depth = 0;

  std::uint64_t level_size(int level) const {
    std::uint64_t size = 1;
    for (int i = 0; i < level; ++i) size *= static_cast<std::uint64_t>(branching);
    return size;
  }
};

/// Map from tree nodes to open intervals of the line. `levels[k - 1]` holds
/// the n^k intervals f(sigma), |sigma| = k, in lexicographic order of sigma,
/// so the parent of entry i at level k + 1 is entry i / n at level k.
struct TAssignment {
  CantorTree tree;
  std::vector<std::vector<Segment>> levels;

  const std::vector<Segment>& level(int k) const { return levels.at(static_cast<std::size_t>(k - 1)); }
  int depth() const { return static_cast<int>(levels.size()); }
};

inline TAssignment make_assignment(int branching, std::vector<std::vector<Segment>> levels) {
  if (branching < 2) throw InvalidInput("branching must be at least 2");
  TAssignment a{{branching, static_cast<int>(levels.size())}, std::move(levels)};
  for (int k = 1; k <= a.depth(); ++k)
    if (a.level(k).size() != a.tree.level_size(k))
      throw InvalidInput("level " + std::to_string(k) + " has " + std::to_string(a.level(k).size()) +
                         " intervals; an " + std::to_string(branching) + "-Cantor tree needs " +
                         std::to_string(a.tree.level_size(k)));
  return a;
}

/// f(sigma) = (Phi(d_sigma) + phi(d_sigma), Phi(d_sigma + 2^{-k})) with
/// d_sigma = sum sigma_i 2^{-i}: the open interior of each construction piece.
inline TAssignment assignment_from_phi(const GapFunction& phi, int depth) {
  if (depth < 1) throw InvalidInput("assignment depth must be at least 1");
  std::vector<std::vector<Segment>> levels;
  for (int k = 1; k <= depth; ++k) levels.push_back(build_cantor(phi, k).pieces);
  return make_assignment(2, std::move(levels));
}

inline TAssignment assignment_from_alpha(const GapSequence& alpha, int depth) {
  return assignment_from_phi(phi_from_alpha(alpha, depth), depth);
}

/// Outcome of checking the four assignment conditions. `nested` uses closure
/// containment; `strictly_nested` records the open-containment reading.
struct AssignmentReport {
  Verdict nonempty = Verdict::True;
  Verdict small_diameter = Verdict::True;
  Verdict disjoint = Verdict::True;
  Verdict nested = Verdict::True;
  Verdict strictly_nested = Verdict::True;
  std::vector<std::string> failures;

  Verdict verdict() const { return nonempty && small_diameter && disjoint && nested; }
};

namespace detail {

inline void record(Verdict& slot, Verdict v, std::vector<std::string>& failures, const std::string& msg) {
  if (v == Verdict::True) return;
  if (slot != Verdict::False) slot = v;
  if (failures.size() < 32) failures.push_back((v == Verdict::False ? "" : "inconclusive: ") + msg);
}

inline std::vector<Segment> sorted_by_position(std::vector<Segment> level) {
  std::sort(level.begin(), level.end(),
            [](const Segment& a, const Segment& b) { return a.lo.mid() < b.lo.mid(); });
  return level;
}

// Parent and child share endpoints, and an assignment writes a shared
// endpoint with the same enclosure at both levels, so identical enclosures
// are taken to be the same point.
inline Verdict endpoint_leq(const RatInterval& a, const RatInterval& b) {
  return a == b ? Verdict::True : certainly_leq(a, b);
}

inline Verdict endpoint_less(const RatInterval& a, const RatInterval& b) {
  return a == b ? Verdict::False : certainly_less(a, b);
}

}  // namespace detail

inline AssignmentReport validate_assignment(const TAssignment& a) {
  AssignmentReport r;
  for (int k = 1; k <= a.depth(); ++k) {
    const auto& level = a.level(k);
    const std::string where = "level " + std::to_string(k);
    const RatInterval bound(Rational(1) / k);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& s = level[i];
      const std::string node = where + " node " + std::to_string(i);
      detail::record(r.nonempty, certainly_less(RatInterval(Rational(0)), s.length), r.failures,
                     node + ": empty interval");
      detail::record(r.small_diameter, certainly_less(s.length, bound), r.failures,
                     node + ": diameter not below 1/" + std::to_string(k));
    }
    const auto sorted = detail::sorted_by_position(level);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      detail::record(r.disjoint, certainly_leq(sorted[i].hi, sorted[i + 1].lo), r.failures,
                     where + ": intervals " + std::to_string(i) + " and " + std::to_string(i + 1) +
                         " (by position) intersect");
    if (k == 1) continue;
    const auto& parents = a.level(k - 1);
    const auto n = static_cast<std::size_t>(a.tree.branching);
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& child = level[i];
      const auto& parent = parents[i / n];
      const std::string node = where + " node " + std::to_string(i);
      detail::record(r.nested,
                     detail::endpoint_leq(parent.lo, child.lo) && detail::endpoint_leq(child.hi, parent.hi),
                     r.failures, node + ": closure not inside parent");
      const Verdict strict =
          detail::endpoint_less(parent.lo, child.lo) && detail::endpoint_less(child.hi, parent.hi);
      if (strict != Verdict::True && r.strictly_nested != Verdict::False) r.strictly_nested = strict;
    }
  }
  return r;
}

/// Per-level min and max diameters m_k, M_k for k = 1..depth.
struct DiameterProfile {
  std::vector<RatInterval> min_diam;
  std::vector<RatInterval> max_diam;

  int depth() const { return static_cast<int>(min_diam.size()); }
  const RatInterval& m(int k) const { return min_diam.at(static_cast<std::size_t>(k - 1)); }
  const RatInterval& M(int k) const { return max_diam.at(static_cast<std::size_t>(k - 1)); }
};

inline DiameterProfile diameter_profile(const TAssignment& a) {
  DiameterProfile p;
  for (int k = 1; k <= a.depth(); ++k) {
    const auto& level = a.level(k);
    Rational min_lo = level.front().length.lo(), min_hi = level.front().length.hi();
    Rational max_lo = min_lo, max_hi = min_hi;
    for (const auto& s : level) {
      min_lo = std::min(min_lo, s.length.lo());
      min_hi = std::min(min_hi, s.length.hi());
      max_lo = std::max(max_lo, s.length.lo());
      max_hi = std::max(max_hi, s.length.hi());
    }
    p.min_diam.emplace_back(min_lo, min_hi);
    p.max_diam.emplace_back(max_lo, max_hi);
  }
  return p;
}

/// Certified M_{k+1} < m_k for every pair of stored adjacent levels.
inline Verdict check_regular(const DiameterProfile& p, int* failing_level = nullptr) {
  Verdict v = Verdict::True;
  for (int k = 1; k < p.depth(); ++k) {
    const Verdict step = certainly_less(p.M(k + 1), p.m(k));
    if (step != Verdict::True && failing_level && v == Verdict::True) *failing_level = k;
    v = v && step;
    if (v == Verdict::False) break;
  }
  return v;
}

inline Verdict check_regular(const TAssignment& a) { return check_regular(diameter_profile(a)); }

struct LIntersectionReport {
  Verdict verdict = Verdict::True;
  std::vector<int> vacuous_levels;  // levels with fewer than l intervals
  std::optional<std::pair<int, std::size_t>> failure;  // (level, first interval of the window)
};

/// The l-intersection condition on the line. A ball meeting sorted disjoint
/// intervals I_i and I_j contains everything between them, so only windows
/// of l consecutive intervals matter, and the balls that contain the least
/// are (hi_i - eps, lo_{i+l-1} + eps). Such a ball contains the closure of
/// I_j for every eps > 0 iff hi_i <= lo_j and hi_j <= lo_{i+l-1}.
inline LIntersectionReport check_l_intersection(const TAssignment& a, int l) {
  if (l < 2) throw InvalidInput("l must be at least 2");
  LIntersectionReport r;
  const auto width = static_cast<std::size_t>(l);
  for (int k = 1; k <= a.depth(); ++k) {
    const auto sorted = detail::sorted_by_position(a.level(k));
    if (sorted.size() < width) {
      r.vacuous_levels.push_back(k);
      continue;
    }
    for (std::size_t i = 0; i + width <= sorted.size(); ++i) {
      const auto& left = sorted[i].hi;
      const auto& right = sorted[i + width - 1].lo;
      Verdict window = Verdict::False;
      for (std::size_t j = i; j < i + width && window != Verdict::True; ++j) {
        const Verdict inside = certainly_leq(left, sorted[j].lo) && certainly_leq(sorted[j].hi, right);
        if (inside == Verdict::True) window = Verdict::True;
        else if (inside == Verdict::Inconclusive) window = Verdict::Inconclusive;
      }
      if (window != Verdict::True && !r.failure) r.failure = std::make_pair(k, i);
      r.verdict = r.verdict && window;
      if (r.verdict == Verdict::False) return r;
    }
  }
  return r;
}

/// Closed level-k intervals, sorted left to right.
inline CantorApprox body_approx(const TAssignment& a, int k) {
  if (k < 1 || k > a.depth())
    throw ResolutionError("level " + std::to_string(k) + " is not stored", k);
  CantorApprox out;
  out.depth = k;
  out.pieces = detail::sorted_by_position(a.level(k));
  for (std::size_t i = 0; i + 1 < out.pieces.size(); ++i) {
    const RatInterval g = out.pieces[i + 1].lo - out.pieces[i].hi;
    out.gaps.emplace_back(std::max(g.lo(), Rational(0)), g.hi());
  }
  return out;
}

}  // namespace cantor
