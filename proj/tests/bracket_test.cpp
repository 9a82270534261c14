#include "knotx/bracket.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace knotx {
namespace {

using testing::kHopfPd;
using testing::kKinkPd;
using testing::kTrefoilPd;

LaurentA A(int d, long long c = 1) { return LaurentA::monomial(c, d); }

TEST(EnumerateStates, Counts) {
  const auto unknot = enumerate_states(unknot_diagram());
  ASSERT_EQ(unknot.size(), 1u);
  EXPECT_EQ(unknot[0].loop_count, 1);

  const auto kink = enumerate_states(parse_pd(kKinkPd));
  ASSERT_EQ(kink.size(), 2u);
  EXPECT_EQ(kink[0].loop_count + kink[1].loop_count, 3);

  const Diagram d = parse_pd(kTrefoilPd);
  const auto states = enumerate_states(d);
  ASSERT_EQ(states.size(), 8u);
  EXPECT_EQ(states.front().loop_count + states.back().loop_count, 5);
  for (const auto &s : states) {
    EXPECT_EQ(s.a_count + s.b_count, 3);
    EXPECT_EQ(s.loop_count, testing::walk_loops(d, s.assignment));
  }
}

TEST(EnumerateStates, LoopCountsMatchWalkingOracle) {
  for (const KnotRecord *r : testing::records(false, 7))
    for (const auto &s : enumerate_states(r->diagram))
      ASSERT_EQ(s.loop_count, testing::walk_loops(r->diagram, s.assignment)) << r->name;
}

TEST(EnumerateStates, LimitIsEnforced) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_THROW(enumerate_states(d, {2, 1}), CrossingLimitError);
  EXPECT_THROW(kauffman_bracket(d, {2, 1}), CrossingLimitError);
  EXPECT_NO_THROW(kauffman_bracket(d, {3, 1}));
}

TEST(KauffmanBracket, SmallDiagrams) {
  EXPECT_EQ(kauffman_bracket(unknot_diagram()), LaurentA(1));
  const Diagram kink = parse_pd(kKinkPd);
  EXPECT_EQ(kauffman_bracket(kink), A(3 * kink.sign(0), -1));
  EXPECT_EQ(kauffman_bracket(mirror_of(kink)), A(-3, -1));
  EXPECT_EQ(kauffman_bracket(parse_pd(kHopfPd)), A(4, -1) + A(-4, -1));
}

TEST(KauffmanBracket, MatchesRecursiveSmoothingOracle) {
  for (const KnotRecord *r : testing::records(false, 8))
    ASSERT_EQ(kauffman_bracket(r->diagram), testing::recursive_bracket(r->diagram)) << r->name;
  EXPECT_EQ(kauffman_bracket(parse_pd(kHopfPd)), testing::recursive_bracket(parse_pd(kHopfPd)));
}

TEST(KauffmanBracket, ParallelMatchesSequential) {
  const Diagram &d = testing::bundled_table().at("10_70").diagram;
  EXPECT_EQ(kauffman_bracket(d, {20, 4}), kauffman_bracket(d, {20, 1}));
}

TEST(XPolynomial, Normalisation) {
  EXPECT_EQ(x_polynomial(parse_pd(kKinkPd)), LaurentA(1));
  EXPECT_EQ(x_polynomial(parse_pd(testing::kKinkedTrefoilPd)), x_polynomial(parse_pd(kTrefoilPd)));
  EXPECT_EQ(x_polynomial(parse_pd("O[1] O[2]")), A(2, -1) + A(-2, -1));

  const LaurentA x = x_polynomial(parse_pd(kTrefoilPd));
  EXPECT_EQ(x, A(4) + A(12) + A(16, -1));
  EXPECT_EQ(x.span(), 12);
  EXPECT_EQ(abs(x.coeff_from_bottom(0)), 1);
  EXPECT_EQ(abs(x.coeff_from_top(0)), 1);
  EXPECT_EQ(x.coeff_from_bottom(1), 0);
  EXPECT_EQ(x.coeff_from_top(1), 1);
}

TEST(Jones, Values) {
  EXPECT_EQ(render(jones(unknot_diagram())), "1");
  EXPECT_EQ(render(jones(parse_pd(kTrefoilPd))), "-t^-4 + t^-3 + t^-1");
  EXPECT_EQ(render(jones(parse_pd(kHopfPd))), "-t^(-5/2) - t^(-1/2)");
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_EQ(jones(mirror_of(d)), jones(d).inverted());
}

TEST(Span, Identities) {
  EXPECT_EQ(span_x(unknot_diagram()), 0);
  EXPECT_EQ(span_x(parse_pd(kTrefoilPd)), 12);
  // Split alternating diagram: 4c + 4(n - 1).
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_EQ(span_x(disjoint_union(d, d)), 4 * 6 + 4);
  const Diagram three = disjoint_union(disjoint_union(d, parse_pd(kHopfPd)), d);
  EXPECT_EQ(span_x(three), 4 * 8 + 4 * 2);
}

TEST(PredictedMinDeg, TrefoilAndPreconditions) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_EQ(predicted_min_deg(d), x_polynomial(d).min_deg());
  EXPECT_EQ(predicted_max_deg(d), x_polynomial(d).max_deg());
  EXPECT_THROW(predicted_min_deg(unknot_diagram()), PreconditionError);
  EXPECT_THROW(predicted_min_deg(crossing_change(d, 0)), PreconditionError);
}

TEST(BracketProperty, InvariantUnderRelabelling) {
  std::mt19937 rng(42);
  for (const KnotRecord *r : testing::records(false, 8)) {
    const LaurentA expected = kauffman_bracket(r->diagram);
    for (int trial = 0; trial < 3; ++trial) {
      const Diagram s = testing::scrambled(r->diagram, rng);
      ASSERT_EQ(kauffman_bracket(s), expected) << r->name;
      ASSERT_EQ(s.writhe(), r->diagram.writhe()) << r->name;
    }
  }
}

TEST(BracketProperty, MirrorInvertsA) {
  for (const KnotRecord *r : testing::records(false, 9))
    ASSERT_EQ(x_polynomial(mirror_of(r->diagram)), x_polynomial(r->diagram).inverted()) << r->name;
}

TEST(BracketProperty, AlternatingEndCoefficientsAndSpan) {
  for (const KnotRecord *r : testing::records(true, 9)) {
    const LaurentA x = x_polynomial(r->diagram);
    ASSERT_EQ(x.span(), 4 * r->crossing_number) << r->name;
    ASSERT_EQ(abs(x.coeff_from_bottom(0)), 1) << r->name;
    ASSERT_EQ(abs(x.coeff_from_top(0)), 1) << r->name;
    const int c = r->diagram.crossing_count();
    ASSERT_EQ(all_state_loops(r->diagram, Splice::A) + all_state_loops(r->diagram, Splice::B), c + 2)
        << r->name;
    ASSERT_EQ(predicted_min_deg(r->diagram), x.min_deg()) << r->name;
  }
}

} // namespace
} // namespace knotx
