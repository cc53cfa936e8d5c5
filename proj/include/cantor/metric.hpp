#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cantor/cantor_approx.hpp"
#include "cantor/davies.hpp"

namespace cantor {

/// Nonempty compact subset of the line stored as a finite union of closed
/// intervals (points are degenerate intervals), sorted and merged. `slack`
/// bounds the Hausdorff distance between the represented set and the set it
/// stands for; it is zero when the representation is exact.
class CompactRep {
public:
  struct Component {
    Rational lo;
    Rational hi;
    friend bool operator==(const Component&, const Component&) = default;
  };

  static CompactRep from_intervals(std::vector<Component> parts, Rational slack = 0) {
    if (parts.empty()) throw InvalidInput("compact set representation is empty");
    for (const auto& c : parts)
      if (c.hi < c.lo) throw InvalidInput("interval with hi < lo");
    if (slack < 0) throw InvalidInput("slack must be nonnegative");
    std::sort(parts.begin(), parts.end(), [](const Component& a, const Component& b) { return a.lo < b.lo; });
    std::vector<Component> merged;
    for (auto& c : parts) {
      if (!merged.empty() && c.lo <= merged.back().hi) {
        if (c.hi > merged.back().hi) merged.back().hi = c.hi;
      } else {
        merged.push_back(std::move(c));
      }
    }
    CompactRep r;
    r.parts_ = std::move(merged);
    r.slack_ = std::move(slack);
    return r;
  }

  static CompactRep from_points(const std::vector<Rational>& points) {
    std::vector<Component> parts;
    parts.reserve(points.size());
    for (const auto& p : points) parts.push_back({p, p});
    return from_intervals(std::move(parts));
  }

  static CompactRep from_cloud(const PointCloud& cloud) { return from_points(cloud.points); }

  /// Outer hulls of the pieces; the endpoint enclosure widths become slack.
  static CompactRep from_approx(const CantorApprox& approx) {
    std::vector<Component> parts;
    Rational slack = 0;
    for (const auto& s : approx.pieces) {
      parts.push_back({s.lo.lo(), s.hi.hi()});
      slack = std::max({slack, s.lo.width(), s.hi.width()});
    }
    return from_intervals(std::move(parts), slack);
  }

  const std::vector<Component>& components() const { return parts_; }
  const Rational& slack() const { return slack_; }
  const Rational& min() const { return parts_.front().lo; }
  const Rational& max() const { return parts_.back().hi; }
  Rational diameter() const { return max() - min(); }

  CompactRep translated(const Rational& by) const {
    CompactRep r = *this;
    for (auto& c : r.parts_) {
      c.lo += by;
      c.hi += by;
    }
    return r;
  }

  CompactRep scaled(const Rational& by) const {
    if (by <= 0) throw InvalidInput("scale factor must be positive");
    CompactRep r = *this;
    for (auto& c : r.parts_) {
      c.lo *= by;
      c.hi *= by;
    }
    r.slack_ *= by;
    return r;
  }

  /// Distance from x to the set.
  Rational distance_to(const Rational& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Component& c) { return v < c.lo; });
    Rational best = -1;
    if (it != parts_.end()) best = it->lo - x;
    if (it != parts_.begin()) {
      const auto& c = *(it - 1);
      const Rational d = x <= c.hi ? Rational(0) : x - c.hi;
      if (best < 0 || d < best) best = d;
    }
    return best;
  }

  friend bool operator==(const CompactRep& a, const CompactRep& b) {
    return a.parts_ == b.parts_ && a.slack_ == b.slack_;
  }

private:
  CompactRep() = default;
  std::vector<Component> parts_;
  Rational slack_ = 0;
};

/// sup over a in A of dist(a, B). On each component of A the distance to B
/// is piecewise linear with interior maxima only at midpoints of gaps of B.
inline Rational directed_distance(const CompactRep& a, const CompactRep& b) {
  Rational best = 0;
  auto consider = [&](const Rational& x) {
    const Rational d = b.distance_to(x);
    if (d > best) best = d;
  };
  for (const auto& c : a.components()) {
    consider(c.lo);
    consider(c.hi);
  }
  const auto& bs = b.components();
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
    const Rational mid = (bs[i].hi + bs[i + 1].lo) / 2;
    if (a.distance_to(mid) == 0) consider(mid);
  }
  return best;
}

/// Hausdorff distance, widened by both representations' slack.
inline RatInterval hausdorff_distance(const CompactRep& a, const CompactRep& b) {
  const Rational d = std::max(directed_distance(a, b), directed_distance(b, a));
  const Rational slack = a.slack() + b.slack();
  return {std::max(d - slack, Rational(0)), d + slack};
}

enum class Family { HVisible, StronglyInvisible };

inline std::string to_string(Family f) { return f == Family::HVisible ? "hvisible" : "invisible"; }

inline Family parse_family(const std::string& s) {
  if (s == "hvisible" || s == "h-visible") return Family::HVisible;
  if (s == "invisible" || s == "strongly-invisible") return Family::StronglyInvisible;
  throw InvalidInput("unknown family '" + s + "' (expected hvisible or invisible)");
}

/// One member of a family, represented finitely. `rep.slack()` bounds its
/// Hausdorff distance to the actual member; the member contains 0 and lies in
/// [0, diameter].
struct FamilySeed {
  Family family;
  std::string description;
  CompactRep rep;
  Rational diameter;
};

/// A family member with diameter at most `max_diameter`.
///   hvisible: the middle-thirds set inside [0, 3^{-j}], a clopen piece of
///     it, stored as its depth-(j + 2) pieces.
///   invisible: the default Davies set (three blocks, truncation 6) scaled
///     by 2^{-s}.
inline FamilySeed family_seed(Family family, const Rational& max_diameter) {
  if (max_diameter <= 0) throw InvalidInput("seed diameter must be positive");
  if (family == Family::HVisible) {
    int j = 0;
    Rational size = 1;
    while (size > max_diameter) {
      size /= 3;
      ++j;
    }
    const auto pieces = build_cantor(middle_thirds(2), 2);
    // Every point of a piece is within half its length of an endpoint, and
    // endpoints belong to the set.
    auto rep = CompactRep::from_approx(pieces).scaled(size);
    rep = CompactRep::from_intervals(rep.components(), size / 18);
    return {family, "middle-thirds clopen piece [0, 3^-" + std::to_string(j) + "]", std::move(rep), size};
  }
  constexpr int kBlocks = 3;
  constexpr int kTruncation = 6;
  const auto config = default_davies_config(kTruncation, kBlocks);
  const auto assembled = assemble_C(config);
  // Blocks beyond the third lie within x_4 + rho_4 of 0; words beyond the
  // truncation move points by at most the tail bound.
  const Rational x_next = config.anchors.back() / 2;
  const Rational far = x_next + x_next / 4;
  const Rational slack = std::max(far, config.sequence.tail_bound());
  const Rational full_diameter = config.anchors.front() + config.radii.front();
  int s = 0;
  Rational scale = 1;
  while (full_diameter * scale > max_diameter) {
    scale /= 2;
    ++s;
  }
  auto rep = CompactRep::from_intervals(CompactRep::from_cloud(assembled.cloud).components(), slack).scaled(scale);
  return {family, "Davies set scaled by 2^-" + std::to_string(s), std::move(rep), full_diameter * scale};
}

/// Greedy left-to-right net: every point of `target` is within radius of a
/// net point, and every net point lies in `target`.
inline std::vector<Rational> greedy_net(const CompactRep& target, const Rational& radius) {
  if (radius <= 0) throw InvalidInput("net radius must be positive");
  std::vector<Rational> net;
  for (const auto& c : target.components()) {
    Rational cur;
    if (net.empty() || c.lo > net.back() + radius) {
      net.push_back(c.lo);
      cur = c.lo;
    } else {
      cur = net.back();
    }
    while (cur + radius < c.hi) {
      cur = std::min(cur + 2 * radius, c.hi);
      net.push_back(cur);
    }
  }
  return net;
}

/// Union of translates of one family member.
struct TranslateUnion {
  FamilySeed seed;
  std::vector<Rational> offsets;

  CompactRep expand() const {
    std::vector<CompactRep::Component> parts;
    for (const auto& x : offsets)
      for (const auto& c : seed.rep.components()) parts.push_back({c.lo + x, c.hi + x});
    // Translating every copy moves nothing relative to its member, so the
    // seed's slack carries over unchanged.
    return CompactRep::from_intervals(std::move(parts), seed.rep.slack());
  }
};

struct DenseApprox {
  TranslateUnion construction;
  CompactRep output;
  RatInterval distance;  // enclosure of d_H(actual output set, actual target)
  bool within_epsilon;
};

/// Finite union of translates of a family member of diameter <= eps/2, one
/// at each point of an eps/2-net of the target; its distance to the target is
/// at most eps.
inline DenseApprox dense_approx(const CompactRep& target, const Rational& epsilon, Family family) {
  if (epsilon <= 0) throw InvalidInput("epsilon must be positive");
  const Rational half = epsilon / 2;
  TranslateUnion tu{family_seed(family, half), greedy_net(target, half)};
  CompactRep output = tu.expand();
  const RatInterval d = hausdorff_distance(output, target);
  const bool ok = d.hi() <= epsilon;
  return {std::move(tu), std::move(output), d, ok};
}

}  // namespace cantor
