#include <gtest/gtest.h>

#include "cantor/cantor.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

Rational q(long long n, long long d = 1) { return make_rational(n, d); }

Rational two_pow_inv(int k) { return pow2_inv(static_cast<unsigned>(k)); }

// Candidate runs of exact pieces whose hull fits under delta, with weights
// h(hull diameter); hull diameter is computed from endpoints directly.
struct Candidates {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  std::vector<Rational> weights;
};

Candidates exact_candidates(const std::vector<std::pair<Rational, Rational>>& pieces, const GaugeFunction& h,
                            const Rational& delta) {
  Candidates c;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i; j < pieces.size(); ++j) {
      const Rational d = pieces[j].second - pieces[i].first;
      if (d > delta) break;
      c.runs.emplace_back(i, j);
      c.weights.push_back(h(d));
    }
  return c;
}

}  // namespace

TEST(SynthGauge, MiddleThirdsPlateauIdentity) {
  const auto a = assignment_from_phi(middle_thirds(6), 6);
  const auto h = synth_gauge(diameter_profile(a), 2);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(h(oracle::third_pow(k)), two_pow_inv(k));
  EXPECT_EQ(h(q(0)), q(0));
  EXPECT_EQ(h(q(5)), q(1, 2));  // constant past M_1
  EXPECT_EQ(h.plateaus().size(), 6U);
  EXPECT_EQ(h.branching(), 2);
}

TEST(SynthGauge, IsContinuousAndNondecreasing) {
  const auto a = assignment_from_alpha(GapSequence::geometric(q(1, 2)), 5);
  const auto h = synth_gauge(diameter_profile(a), 2);
  Rational prev = -1;
  for (int i = 0; i <= 400; ++i) {
    const Rational t = q(i, 800);
    const Rational v = h(t);
    EXPECT_GE(v, prev);
    prev = v;
  }
  // Continuity at the knots: left and right limits agree.
  for (const auto& k : h.knots()) {
    if (k.t == 0) continue;
    const Rational eps = k.t / 1000000;
    EXPECT_LT(h(k.t) - h(k.t - eps), q(1, 1000));
    EXPECT_LT(h(k.t + eps) - h(k.t), q(1, 1000));
  }
}

TEST(SynthGauge, PlateauHullsContainEveryLevelDiameter) {
  const auto a = assignment_from_alpha(GapSequence::geometric(q(1, 2)), 6);
  const auto h = synth_gauge(diameter_profile(a), 2);
  for (int k = 1; k <= 6; ++k)
    for (const auto& s : a.level(k)) EXPECT_EQ(eval_gauge(h, s.length), RatInterval(two_pow_inv(k)));
}

TEST(SynthGauge, RejectsIrregularProfiles) {
  const auto bad = make_assignment(
      2, {{Segment::exact(q(0), q(2, 5)), Segment::exact(q(95, 100), q(1))},
          {Segment::exact(q(0), q(1, 5)), Segment::exact(q(3, 10), q(7, 20)), Segment::exact(q(95, 100), q(96, 100)),
           Segment::exact(q(98, 100), q(99, 100))}});
  EXPECT_THROW(synth_gauge(diameter_profile(bad), 2), PreconditionError);
  EXPECT_THROW(synth_gauge(diameter_profile(bad), 1), InvalidInput);
}

TEST(EvalGauge, Examples) {
  const auto h = synth_gauge(diameter_profile(assignment_from_phi(middle_thirds(3), 3)), 2);
  EXPECT_EQ(eval_gauge(h, RatInterval(q(0))), RatInterval(q(0)));
  EXPECT_EQ(eval_gauge(h, RatInterval(q(1, 9))), RatInterval(q(1, 4)));
  // Halfway between the level-2 and level-1 plateaus.
  EXPECT_EQ(eval_gauge(h, RatInterval(q(2, 9))), RatInterval(q(3, 8)));
  EXPECT_EQ(eval_gauge(h, RatInterval(q(1, 9), q(1, 3))), RatInterval(q(1, 4), q(1, 2)));
  EXPECT_THROW(eval_gauge(h, RatInterval(q(-1), q(0))), InvalidInput);
}

TEST(GaugeFunction, RejectsBadKnots) {
  using K = GaugeFunction::Knot;
  EXPECT_THROW(GaugeFunction({K{q(1), q(0)}}, q(0)), InvalidInput);
  EXPECT_THROW(GaugeFunction({K{q(0), q(0)}, K{q(1, 2), q(1)}, K{q(1, 2), q(2)}}, q(0)), InvalidInput);
  EXPECT_THROW(GaugeFunction({K{q(0), q(0)}, K{q(1, 2), q(1)}, K{q(1), q(1, 2)}}, q(0)), InvalidInput);
  EXPECT_THROW(GaugeFunction::linear(q(-1)), InvalidInput);
  EXPECT_EQ(GaugeFunction::linear(q(3))(q(1, 6)), q(1, 2));
}

TEST(NaturalCoverSum, IsOneForSynthesizedGauges) {
  const auto mt = assignment_from_phi(middle_thirds(6), 6);
  const auto hm = synth_gauge(diameter_profile(mt), 2);
  const auto geo = assignment_from_alpha(GapSequence::geometric(q(1, 2)), 6);
  const auto hg = synth_gauge(diameter_profile(geo), 2);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(natural_cover_sum(mt, hm, k), RatInterval(q(1)));
    EXPECT_EQ(natural_cover_sum(geo, hg, k), RatInterval(q(1)));
  }
  EXPECT_THROW(natural_cover_sum(mt, hm, 7), ResolutionError);
}

TEST(NaturalCoverSum, ForeignGauge) {
  const auto mt = assignment_from_phi(middle_thirds(5), 5);
  const auto h = GaugeFunction::linear(q(1));
  Rational expected = 1;
  for (int k = 1; k <= 5; ++k) {
    expected *= q(2, 3);
    EXPECT_EQ(natural_cover_sum(mt, h, k), RatInterval(expected));
  }
}

TEST(CertifiedConstant, MatchesBruteForceMinimality) {
  EXPECT_EQ(certified_constant(2, 3).j0, 2);
  EXPECT_EQ(certified_constant(2, 3).c, q(1, 8));
  EXPECT_EQ(certified_constant(2, 2).j0, 2);
  EXPECT_EQ(certified_constant(2, 2).c, q(1, 8));
  EXPECT_EQ(certified_constant(3, 3).j0, 2);  // 3^1 = 3 is not > 3
  EXPECT_EQ(certified_constant(3, 3).c, q(1, 27));
  for (int n = 2; n <= 6; ++n)
    for (int l = 2; l <= 40; ++l) {
      int j = 0;
      long long p = 1;
      while (!(p > l)) {
        p *= n;
        ++j;
      }
      const auto cc = certified_constant(n, l);
      EXPECT_EQ(cc.j0, j) << n << "," << l;
      EXPECT_EQ(cc.c, q(1, p * n));
    }
  EXPECT_THROW(certified_constant(1, 3), InvalidInput);
  EXPECT_THROW(certified_constant(2, 1), InvalidInput);
}

TEST(MinCoverOracle, MiddleThirdsIsExactlyOne) {
  for (int k = 1; k <= 6; ++k) {
    const auto phi = middle_thirds(k);
    const auto h = synth_gauge(diameter_profile(assignment_from_phi(phi, k)), 2);
    const auto r = min_cover_oracle(build_cantor(phi, k), h, oracle::third_pow(k));
    EXPECT_EQ(r.value, RatInterval(q(1)));
    EXPECT_EQ(r.runs.size(), std::size_t{1} << k);
  }
}

TEST(MinCoverOracle, AgreesWithExhaustiveSearch) {
  struct Case {
    int depth;
    Rational delta;
  };
  for (const auto& c : {Case{2, q(1)}, Case{3, q(1, 3)}, Case{3, q(1, 9)}, Case{3, q(1)}, Case{4, q(1, 27)},
                        Case{4, q(1, 9)}}) {
    const auto phi = middle_thirds(c.depth);
    const auto approx = build_cantor(phi, c.depth);
    const auto pieces = oracle::ternary_pieces(c.depth);
    for (const auto& h : {synth_gauge(diameter_profile(assignment_from_phi(phi, c.depth)), 2),
                          GaugeFunction::linear(q(1)),
                          GaugeFunction({{q(0), q(0)}, {q(1, 27), q(1, 4)}, {q(1, 3), q(1, 2)}}, q(0))}) {
      const auto cand = exact_candidates(pieces, h, c.delta);
      const Rational expected = oracle::exhaustive_min_cover(pieces.size(), cand.runs, cand.weights);
      const auto r = min_cover_oracle(approx, h, c.delta);
      EXPECT_EQ(r.value, RatInterval(expected)) << "depth " << c.depth << " delta " << to_string(c.delta);
      // The certificate covers every piece with admissible runs.
      std::size_t next = 0;
      Rational total = 0;
      for (const auto& [a, b] : r.runs) {
        EXPECT_EQ(a, next);
        EXPECT_LE(pieces[b].second - pieces[a].first, c.delta);
        total += h(pieces[b].second - pieces[a].first);
        next = b + 1;
      }
      EXPECT_EQ(next, pieces.size());
      EXPECT_EQ(total, expected);
    }
  }
}

TEST(MinCoverOracle, GeometricSandwich) {
  const auto alpha = GapSequence::geometric(q(1, 2));
  const auto a = assignment_from_alpha(alpha, 6);
  const auto profile = diameter_profile(a);
  const auto h = synth_gauge(profile, 2);
  const auto r = min_cover_oracle(body_approx(a, 6), h, profile.M(6).hi());
  EXPECT_LE(certified_constant(2, 3).c, r.value.lo());
  EXPECT_LE(r.value.hi(), q(1));
}

TEST(MinCoverOracle, Errors) {
  const auto approx = build_cantor(middle_thirds(2), 2);
  const auto h = GaugeFunction::linear(q(1));
  EXPECT_THROW(min_cover_oracle(approx, h, q(1, 10)), InfeasibleError);
  EXPECT_THROW(min_cover_oracle(approx, h, q(0)), InvalidInput);
}
