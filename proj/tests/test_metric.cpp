#include <gtest/gtest.h>

#include <random>

#include "cantor/cantor.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

using C = CompactRep::Component;

// Every component sampled on a grid of the given step (endpoints included).
std::vector<Rational> sample(const CompactRep& r, const Rational& step) {
  std::vector<Rational> out;
  for (const auto& c : r.components()) {
    for (Rational x = c.lo; x < c.hi; x += step) out.push_back(x);
    out.push_back(c.hi);
  }
  return out;
}

CompactRep random_target(std::mt19937& rng) {
  std::vector<C> parts;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    const Rational lo = q(static_cast<long long>(rng() % 64), 64);
    const Rational len = (rng() % 2) ? q(0) : q(static_cast<long long>(rng() % 16), 64);
    parts.push_back({lo, lo + len});
  }
  return CompactRep::from_intervals(parts);
}

}  // namespace

TEST(CompactRep, MergesAndValidates) {
  const auto r = CompactRep::from_intervals({{q(1, 2), q(1)}, {q(0), q(1, 4)}, {q(1, 4), q(1, 3)}});
  ASSERT_EQ(r.components().size(), 2U);
  EXPECT_EQ(r.components()[0], (C{q(0), q(1, 3)}));
  EXPECT_EQ(r.diameter(), q(1));
  EXPECT_THROW(CompactRep::from_intervals({}), InvalidInput);
  EXPECT_THROW(CompactRep::from_intervals({{q(1), q(0)}}), InvalidInput);
  EXPECT_THROW(CompactRep::from_intervals({{q(0), q(1)}}, q(-1)), InvalidInput);
  EXPECT_EQ(r.distance_to(q(2, 5)), q(1, 15));
  EXPECT_EQ(r.distance_to(q(3, 4)), q(0));
  EXPECT_EQ(r.distance_to(q(-1)), q(1));
}

TEST(HausdorffDistance, Examples) {
  const auto zero = CompactRep::from_points({q(0)});
  const auto one = CompactRep::from_points({q(1)});
  EXPECT_EQ(hausdorff_distance(zero, one), RatInterval(q(1)));
  const auto mt = CompactRep::from_intervals({{q(0), q(1, 3)}, {q(2, 3), q(1)}});
  EXPECT_EQ(hausdorff_distance(mt, mt), RatInterval(q(0)));
  EXPECT_EQ(hausdorff_distance(mt, CompactRep::from_points({q(0), q(1)})), RatInterval(q(1, 3)));
  // Interior maximum at a gap midpoint of the other set.
  EXPECT_EQ(hausdorff_distance(CompactRep::from_intervals({{q(0), q(1)}}), CompactRep::from_points({q(0), q(1)})),
            RatInterval(q(1, 2)));
}

TEST(HausdorffDistance, SlackWidensTheEnclosure) {
  const auto a = CompactRep::from_intervals({{q(0), q(1)}}, q(1, 10));
  const auto b = CompactRep::from_points({q(0), q(1)});
  EXPECT_EQ(hausdorff_distance(a, b), RatInterval(q(2, 5), q(3, 5)));
}

TEST(HausdorffDistance, AgreesWithPointSamples) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_target(rng);
    const auto b = random_target(rng);
    const Rational step = q(1, 256);
    const Rational sampled = oracle::point_set_hausdorff(sample(a, step), sample(b, step));
    const auto d = hausdorff_distance(a, b);
    ASSERT_TRUE(d.exact());
    // Sampling moves each set by at most step/2.
    EXPECT_LE(d.lo() - step, sampled);
    EXPECT_LE(sampled, d.lo() + step);
  }
}

TEST(HausdorffDistance, FiniteSetsMatchExactly) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> a, b;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) a.push_back(q(static_cast<long long>(rng() % 100), 37));
    for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) b.push_back(q(static_cast<long long>(rng() % 100), 41));
    EXPECT_EQ(hausdorff_distance(CompactRep::from_points(a), CompactRep::from_points(b)),
              RatInterval(oracle::point_set_hausdorff(a, b)));
  }
}

TEST(GreedyNet, CoversTheTarget) {
  const auto unit = CompactRep::from_intervals({{q(0), q(1)}});
  EXPECT_EQ(greedy_net(unit, q(1, 8)), (std::vector<Rational>{q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}));
  std::mt19937 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_target(rng);
    const Rational r = q(1, 2 + static_cast<long long>(rng() % 30));
    const auto net = greedy_net(t, r);
    const auto as_set = CompactRep::from_points(net);
    for (const auto& x : sample(t, q(1, 512))) EXPECT_LE(as_set.distance_to(x), r);
    for (const auto& x : net) EXPECT_EQ(t.distance_to(x), q(0));
  }
  EXPECT_THROW(greedy_net(unit, q(0)), InvalidInput);
}

TEST(FamilySeed, HVisibleAndInvisible) {
  const auto h = family_seed(Family::HVisible, q(1, 20));
  EXPECT_EQ(h.diameter, q(1, 27));
  EXPECT_EQ(h.rep.min(), q(0));
  EXPECT_EQ(h.rep.max(), q(1, 27));
  EXPECT_EQ(h.rep.components().size(), 4U);
  const auto inv = family_seed(Family::StronglyInvisible, q(1, 4));
  EXPECT_LE(inv.diameter, q(1, 4));
  EXPECT_LE(inv.rep.max() + inv.rep.slack(), q(1, 4) + inv.rep.slack());
  EXPECT_EQ(inv.rep.min(), q(0));
  EXPECT_THROW(family_seed(Family::HVisible, q(0)), InvalidInput);
  EXPECT_EQ(parse_family("hvisible"), Family::HVisible);
  EXPECT_EQ(parse_family("invisible"), Family::StronglyInvisible);
  EXPECT_THROW(parse_family("visible"), InvalidInput);
}

TEST(DenseApprox, Examples) {
  const auto three = CompactRep::from_points({q(0), q(1, 2), q(1)});
  const auto r = dense_approx(three, q(1, 10), Family::HVisible);
  EXPECT_EQ(r.construction.offsets, (std::vector<Rational>{q(0), q(1, 2), q(1)}));
  EXPECT_EQ(r.construction.seed.diameter, q(1, 27));
  EXPECT_TRUE(r.within_epsilon);
  EXPECT_LE(r.distance.hi(), q(1, 10));

  const auto unit = CompactRep::from_intervals({{q(0), q(1)}});
  const auto u = dense_approx(unit, q(1, 4), Family::HVisible);
  EXPECT_EQ(u.construction.offsets, (std::vector<Rational>{q(0), q(1, 4), q(1, 2), q(3, 4), q(1)}));
  EXPECT_TRUE(u.within_epsilon);

  const auto big = dense_approx(three, q(4), Family::StronglyInvisible);
  EXPECT_EQ(big.construction.offsets.size(), 1U);
  EXPECT_TRUE(big.within_epsilon);
  EXPECT_THROW(dense_approx(three, q(0), Family::HVisible), InvalidInput);
}

TEST(DenseApprox, RandomTargetsBothFamilies) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_target(rng);
    for (int e = 1; e <= 6; ++e)
      for (Family f : {Family::HVisible, Family::StronglyInvisible}) {
        const Rational eps = pow2_inv(static_cast<unsigned>(e));
        const auto r = dense_approx(t, eps, f);
        EXPECT_TRUE(r.within_epsilon) << to_string(f) << " eps=" << to_string(eps);
        EXPECT_LE(r.construction.seed.diameter, eps / 2);
        // The output is exactly the union of the translates.
        EXPECT_EQ(r.output, r.construction.expand());
      }
  }
}
