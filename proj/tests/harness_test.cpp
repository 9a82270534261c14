#include "knotx/harness.hpp"
#include "knotx/report.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace knotx {
namespace {

using testing::kHopfPd;
using testing::kKinkPd;
using testing::kTrefoilPd;

TEST(Skein, VanishesOnSmallDiagrams) {
  for (const char *pd : {kTrefoilPd, kHopfPd, kKinkPd, testing::kKinkedTrefoilPd}) {
    const Diagram d = parse_pd(pd);
    for (int c = 0; c < d.crossing_count(); ++c) {
      EXPECT_TRUE(check_skein(d, c).is_zero()) << pd << " crossing " << c;
      EXPECT_TRUE(check_t_skein(d, c).is_zero()) << pd << " crossing " << c;
    }
  }
}

TEST(Skein, DetectsWrongNormalisation) {
  // The plain bracket is not a link invariant, so the skein fails on it.
  const SkeinTriple t = skein_triple(parse_pd(kTrefoilPd), 0);
  const LaurentA wrong = LaurentA::monomial(1, 4) * kauffman_bracket(t.l_plus) -
                         LaurentA::monomial(1, -4) * kauffman_bracket(t.l_minus) +
                         (LaurentA::monomial(1, 2) - LaurentA::monomial(1, -2)) *
                             kauffman_bracket(t.l_zero);
  EXPECT_FALSE(wrong.is_zero());
}

TEST(SignsAlternate, Basics) {
  const LaurentA x = x_polynomial(parse_pd(kTrefoilPd));
  EXPECT_TRUE(signs_alternate(x));
  EXPECT_FALSE(signs_alternate(LaurentA::monomial(1, 0) + LaurentA::monomial(1, 4)));
  EXPECT_FALSE(signs_alternate(LaurentA::monomial(1, 0) + LaurentA::monomial(-1, 2)));
  EXPECT_TRUE(signs_alternate(LaurentA::monomial(1, 0) + LaurentA::monomial(1, 8)));
}

TEST(LemmaSuite, PassesOnTableKnots) {
  const KnotTable &t = testing::bundled_table();
  for (const char *name : {"3_1", "4_1", "8_5", "9_35"}) {
    const CheckReport r = lemma_suite(t.at(name).diagram);
    EXPECT_TRUE(r.passed()) << name << "\n" << to_text(r);
    EXPECT_GE(r.checks.size(), 8u);
  }
  EXPECT_TRUE(lemma_suite(parse_pd(kHopfPd)).passed());
}

TEST(LemmaSuite, RejectsUnreducedOrNonAlternating) {
  EXPECT_THROW(lemma_suite(parse_pd(testing::kKinkedTrefoilPd)), PreconditionError);
  EXPECT_THROW(lemma_suite(crossing_change(parse_pd(kTrefoilPd), 0)), PreconditionError);
  EXPECT_THROW(lemma_suite(unknot_diagram()), PreconditionError);
}

TEST(ProofRelations, Trefoil) {
  const Diagram d = parse_pd(kTrefoilPd);
  for (int c = 0; c < 3; ++c) {
    const CheckReport r = proof_relations(d, c);
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
  EXPECT_THROW(proof_relations(mirror_of(d), 0), PreconditionError);
}

TEST(Sweep, TrefoilUnknots) {
  const SweepReport r = theorem_sweep(testing::bundled_table(), "3_1");
  ASSERT_EQ(r.outcomes.size(), 3u);
  for (const auto &o : r.outcomes) {
    EXPECT_EQ(o.target_name(), "0_1");
    EXPECT_EQ(o.c_source - *o.c_target, 3);
    EXPECT_EQ(o.span_drop, 12);
    EXPECT_EQ(o.verdict, Verdict::TheoremHolds);
  }
  EXPECT_FALSE(r.failed());
}

TEST(Sweep, FiveOneGivesTrefoil) {
  const SweepReport r = theorem_sweep(testing::bundled_table(), "5_1");
  for (const auto &o : r.outcomes) {
    EXPECT_EQ(o.target_name(), "3_1");
    EXPECT_EQ(*o.c_target, 3);
    EXPECT_EQ(o.span_drop, 8);
    EXPECT_EQ(o.verdict, Verdict::TheoremHolds);
  }
  EXPECT_NE(to_text(r).find("-> 3_1 (same) alternating c=3 drop=2"), std::string::npos)
      << to_text(r);
}

TEST(Sweep, PositiveCrossingsUseTheMirror) {
  const KnotTable &t = testing::bundled_table();
  const Diagram &d = t.at("5_1").diagram;
  ASSERT_TRUE(d.sign(0) != 0);
  // Mirror of a table entry is not itself in the table, so build one.
  KnotTable mirrored;
  for (const auto &r : t.records())
    mirrored.add(r);
  KnotRecord m = t.at("5_1");
  m.name = "5_1m";
  m.diagram = mirror_of(d);
  m.jones = m.jones.inverted();
  mirrored.add(m);
  const SweepReport r = theorem_sweep(mirrored, "5_1m");
  for (const auto &o : r.outcomes) {
    EXPECT_NE(o.via_mirror, d.sign(o.crossing) > 0);
    EXPECT_EQ(o.target_name(), "3_1");
    EXPECT_EQ(o.verdict, Verdict::TheoremHolds);
  }
}

TEST(Sweep, TenSeventyReachesNineFortyTwo) {
  const SweepReport r = theorem_sweep(testing::bundled_table(), "10_70");
  const auto hit = std::find_if(r.outcomes.begin(), r.outcomes.end(),
                                [](const SweepOutcome &o) { return o.target_name() == "9_42"; });
  ASSERT_NE(hit, r.outcomes.end());
  EXPECT_EQ(hit->c_source - *hit->c_target, 1);
  EXPECT_EQ(hit->target_alternating, false);
  EXPECT_EQ(hit->verdict, Verdict::NonAlternatingExcluded);
  EXPECT_FALSE(r.failed());
}

TEST(Sweep, RejectsNonAlternatingSource) {
  EXPECT_THROW(theorem_sweep(testing::bundled_table(), "9_42"), PreconditionError);
}

TEST(Sweep, ParallelTableSweepIsDeterministic) {
  const auto one = sweep_table(testing::bundled_table(), 6, 1);
  const auto many = sweep_table(testing::bundled_table(), 6, 3);
  ASSERT_EQ(one.size(), many.size());
  std::string a, b;
  for (const auto &r : one)
    a += to_json(r).dump();
  for (const auto &r : many)
    b += to_json(r).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(sweep_summary(one), sweep_summary(many));
}

TEST(Report, JsonShape) {
  const SweepReport r = theorem_sweep(testing::bundled_table(), "3_1");
  const auto j = to_json(r);
  EXPECT_EQ(j["source"], "3_1");
  ASSERT_EQ(j["outcomes"].size(), 3u);
  EXPECT_EQ(j["outcomes"][0]["verdict"], "theorem_holds");
}

} // namespace
} // namespace knotx
