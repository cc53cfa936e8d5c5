#include <gtest/gtest.h>

#include <random>

#include "cantor/cantor.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

Segment seg(const Rational& lo, const Rational& hi) { return Segment::exact(lo, hi); }

TAssignment middle_thirds_assignment(int depth) { return assignment_from_phi(middle_thirds(depth), depth); }

std::vector<std::pair<Rational, Rational>> mids(const std::vector<Segment>& level) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& s : level) out.emplace_back(s.lo.mid(), s.hi.mid());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(AssignmentFromAlpha, ProposalFormula) {
  const auto alpha = GapSequence::geometric(q(1, 2));
  const auto a = assignment_from_alpha(alpha, 3);
  const auto phi = phi_from_alpha(alpha, 3);
  const auto big_phi = cumulative_phi(phi, Dyadic(1, 1));
  EXPECT_EQ(a.level(1)[0].lo, RatInterval(q(0)));
  EXPECT_EQ(a.level(1)[0].hi, big_phi);
  EXPECT_EQ(a.level(1)[1].lo, big_phi + RatInterval(q(1, 2)));
  EXPECT_EQ(a.level(1)[1].hi, RatInterval(q(1)));
}

TEST(AssignmentFromAlpha, MiddleThirdsNode01) {
  const auto a = middle_thirds_assignment(2);
  EXPECT_EQ(a.level(2)[1].lo, RatInterval(q(2, 9)));
  EXPECT_EQ(a.level(2)[1].hi, RatInterval(q(1, 3)));
}

TEST(ValidateAssignment, ConstructedAssignmentsAreValid) {
  for (const auto& alpha : {GapSequence::geometric(q(1, 2)), GapSequence::geometric(q(3, 4))}) {
    const auto r = validate_assignment(assignment_from_alpha(alpha, 6));
    EXPECT_EQ(r.verdict(), Verdict::True) << alpha.describe();
    // Leftmost and rightmost children share an endpoint with their parent.
    EXPECT_EQ(r.strictly_nested, Verdict::False);
  }
  EXPECT_EQ(validate_assignment(middle_thirds_assignment(5)).verdict(), Verdict::True);
}

TEST(ValidateAssignment, OverlapFailsDisjointness) {
  const auto a = make_assignment(2, {{seg(q(0), q(3, 5)), seg(q(1, 2), q(1))}});
  const auto r = validate_assignment(a);
  EXPECT_EQ(r.disjoint, Verdict::False);
  EXPECT_EQ(r.verdict(), Verdict::False);
  ASSERT_FALSE(r.failures.empty());
}

TEST(ValidateAssignment, ChildOutsideParentFailsNesting) {
  const auto a = make_assignment(2, {{seg(q(0), q(1, 3)), seg(q(2, 3), q(1))},
                                     {seg(q(0), q(1, 9)), seg(q(2, 9), q(4, 9)), seg(q(2, 3), q(7, 9)),
                                      seg(q(8, 9), q(1))}});
  const auto r = validate_assignment(a);
  EXPECT_EQ(r.nested, Verdict::False);
  EXPECT_EQ(r.disjoint, Verdict::True);
}

TEST(ValidateAssignment, DiameterAndEmptiness) {
  // Level-1 bound is 1/1, so an interval of length 1 fails condition (2).
  EXPECT_EQ(validate_assignment(make_assignment(2, {{seg(q(0), q(1)), seg(q(2), q(5, 2))}})).small_diameter,
            Verdict::False);
  EXPECT_EQ(validate_assignment(make_assignment(2, {{seg(q(0), q(0)), seg(q(1, 2), q(1))}})).nonempty,
            Verdict::False);
}

TEST(MakeAssignment, RejectsWrongLevelSizes) {
  EXPECT_THROW(make_assignment(2, {{seg(q(0), q(1, 3))}}), InvalidInput);
  EXPECT_THROW(make_assignment(1, {{seg(q(0), q(1, 3))}}), InvalidInput);
}

TEST(DiameterProfile, MiddleThirds) {
  const auto p = diameter_profile(middle_thirds_assignment(5));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(p.m(k), RatInterval(oracle::third_pow(k)));
    EXPECT_EQ(p.M(k), RatInterval(oracle::third_pow(k)));
  }
  EXPECT_THROW(p.m(0), std::out_of_range);
}

TEST(DiameterProfile, GeometricLevelOne) {
  const Rational r = q(1, 2);
  const auto a = assignment_from_alpha(GapSequence::geometric(r), 6);
  const auto p = diameter_profile(a);
  // Independent endpoint arithmetic: left piece has length Phi(1/2), right
  // piece 1 - Phi(1/2) - 1/2.
  const auto big_phi = oracle::geometric_phi_by_listing(r, q(1, 2), 14);
  const RatInterval left = big_phi;
  const RatInterval right = RatInterval(q(1, 2)) - big_phi;
  EXPECT_EQ(certainly_less(right, left), Verdict::True);
  EXPECT_LE(p.M(1).lo(), left.hi());
  EXPECT_LE(left.lo(), p.M(1).hi());
  EXPECT_LE(p.m(1).lo(), right.hi());
  EXPECT_LE(right.lo(), p.m(1).hi());
}

TEST(CheckRegular, Examples) {
  EXPECT_EQ(check_regular(middle_thirds_assignment(6)), Verdict::True);
  for (const auto& alpha : {GapSequence::geometric(q(1, 2)), GapSequence::geometric(q(9, 10))})
    EXPECT_EQ(check_regular(assignment_from_alpha(alpha, 6)), Verdict::True) << alpha.describe();

  const auto bad = make_assignment(
      2, {{seg(q(0), q(2, 5)), seg(q(95, 100), q(1))},
          {seg(q(0), q(1, 5)), seg(q(3, 10), q(7, 20)), seg(q(95, 100), q(96, 100)), seg(q(98, 100), q(99, 100))}});
  int failing = 0;
  EXPECT_EQ(check_regular(diameter_profile(bad), &failing), Verdict::False);
  EXPECT_EQ(failing, 1);
}

TEST(CheckLIntersection, Examples) {
  EXPECT_EQ(check_l_intersection(middle_thirds_assignment(4), 3).verdict, Verdict::True);
  EXPECT_EQ(check_l_intersection(assignment_from_alpha(GapSequence::geometric(q(1, 2)), 6), 3).verdict,
            Verdict::True);
  const auto two = check_l_intersection(middle_thirds_assignment(4), 2);
  EXPECT_EQ(two.verdict, Verdict::False);
  ASSERT_TRUE(two.failure.has_value());
  EXPECT_EQ(two.failure->first, 1);
  EXPECT_THROW(check_l_intersection(middle_thirds_assignment(2), 1), InvalidInput);
}

TEST(CheckLIntersection, ShortLevelsAreVacuous) {
  const auto r = check_l_intersection(middle_thirds_assignment(3), 3);
  EXPECT_EQ(r.verdict, Verdict::True);
  EXPECT_EQ(r.vacuous_levels, std::vector<int>{1});
}

TEST(CheckLIntersection, AgreesWithBallGridOnRandomLevels) {
  // One-level trees with branching = interval count; gaps of 0 make
  // touching neighbours, which is where the window rule is delicate.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int count = 2 + static_cast<int>(rng() % 6);
    std::vector<Segment> level;
    Rational x = 0;
    for (int i = 0; i < count; ++i) {
      x += q(static_cast<long long>(rng() % 3), 10);
      const Rational len = q(1 + static_cast<long long>(rng() % 4), 10);
      level.push_back(seg(x, x + len));
      x += len;
    }
    const auto scale = q(1, 10) / x;  // keeps condition (2) out of the way
    for (auto& s : level) s = seg(s.lo.lo() * scale, s.hi.hi() * scale);
    const auto a = make_assignment(count, {level});
    const auto intervals = mids(level);
    const auto grid = oracle::ball_grid(intervals, q(1, 100000));
    for (int l = 2; l <= 4; ++l) {
      bool violated = false;
      for (std::size_t i = 0; i < grid.size() && !violated; ++i)
        for (std::size_t j = i + 1; j < grid.size() && !violated; ++j)
          violated = oracle::ball_violates(grid[i], grid[j], intervals, l);
      const auto r = check_l_intersection(a, l);
      EXPECT_EQ(r.verdict == Verdict::True, !violated) << "trial " << trial << " l=" << l;
    }
  }
}

TEST(BodyApprox, MiddleThirds) {
  const auto a = middle_thirds_assignment(3);
  const auto body = body_approx(a, 2);
  const auto expected = oracle::ternary_pieces(2);
  ASSERT_EQ(body.pieces.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(body.pieces[i].lo, RatInterval(expected[i].first));
    EXPECT_EQ(body.pieces[i].hi, RatInterval(expected[i].second));
  }
  EXPECT_EQ(body_approx(a, 3).pieces.size(), 8U);
  EXPECT_THROW(body_approx(a, 4), ResolutionError);
  EXPECT_THROW(body_approx(a, 0), ResolutionError);
}
