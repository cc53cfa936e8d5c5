#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantor/gap_function.hpp"

namespace cantor {

/// Interval with enclosed endpoints and a separately tracked length. The
/// length enclosure is never wider than hi - lo and is what diameters use.
struct Segment {
  RatInterval lo;
  RatInterval hi;
  RatInterval length;

  static Segment exact(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw InvalidInput("segment with hi < lo");
    return {lo, hi, RatInterval(hi - lo)};
  }

  bool is_exact() const { return lo.exact() && hi.exact(); }
};

/// Closed construction pieces at a fixed depth, sorted and pairwise disjoint,
/// together with the gaps between consecutive pieces.
struct CantorApprox {
  int depth = 0;
  std::vector<Segment> pieces;
  std::vector<RatInterval> gaps;  // gaps[i] separates pieces[i] and pieces[i + 1]
};

/// Certifies that consecutive segments are strictly separated. Throws
/// Inconclusive naming the first pair it cannot decide and InvalidInput for
/// a pair that certainly overlaps.
inline void certify_separated(const std::vector<Segment>& segs, const std::string& what) {
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    switch (certainly_less(segs[i].hi, segs[i + 1].lo)) {
      case Verdict::True: break;
      case Verdict::False:
        throw InvalidInput(what + " " + std::to_string(i) + " and " + std::to_string(i + 1) +
                           " are not disjoint");
      case Verdict::Inconclusive:
        throw Inconclusive("cannot certify disjointness of " + what + " " + std::to_string(i) +
                           " and " + std::to_string(i + 1) + "; enclosures overlap");
    }
  }
}

/// The 2^k depth-k pieces of K_phi: [0, 1] minus the gaps at every dyadic of
/// level <= k.
inline CantorApprox build_cantor(const GapFunction& phi, int depth) {
  if (depth < 0) throw InvalidInput("depth must be nonnegative");
  if (depth > phi.resolution())
    throw ResolutionError("depth " + std::to_string(depth) + " exceeds resolution " +
                              std::to_string(phi.resolution()),
                          depth);
  CantorApprox out;
  out.depth = depth;
  const std::uint64_t count = std::uint64_t{1} << depth;
  const std::uint64_t span = std::uint64_t{1} << (phi.resolution() - depth);
  out.pieces.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    const std::size_t first = 2 * s * span;
    const std::size_t last = 2 * (s + 1) * span - 1;
    out.pieces.push_back({phi.prefix_mass(first), phi.prefix_mass(last), phi.mass_between(first, last)});
  }
  for (std::uint64_t s = 1; s < count; ++s)
    out.gaps.emplace_back(phi.value(Dyadic::reduce(s, depth)));
  certify_separated(out.pieces, "pieces");
  return out;
}

}  // namespace cantor
