#include "knotx/diagram.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace knotx {
namespace {

using testing::kHopfPd;
using testing::kKinkedTrefoilPd;
using testing::kKinkPd;
using testing::kTrefoilPd;

TEST(ParsePd, Trefoil) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.arc_count(), 6);
  EXPECT_EQ(d.component_count(), 1);
  ASSERT_EQ(d.components().size(), 1u);
  EXPECT_EQ(d.components()[0], (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(d.to_pd(), kTrefoilPd);
}

TEST(ParsePd, SmallestDiagramAndComments) {
  const Diagram kink = parse_pd("# a kink\nX[1,1,2,2]  # trailing\n");
  EXPECT_EQ(kink.crossing_count(), 1);
  EXPECT_EQ(kink.component_count(), 1);

  const Diagram unlink = parse_pd("O[1] O[2]");
  EXPECT_EQ(unlink.crossing_count(), 0);
  EXPECT_EQ(unlink.component_count(), 2);
}

TEST(ParsePd, ValidationNamesOffendingArc) {
  try {
    parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,4]");
    FAIL() << "expected a validation error";
  } catch (const PdValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("arc 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_pd("X[1,2,3,4]"), PdValidationError);
  EXPECT_THROW(parse_pd("X[1,1,3,3]"), PdValidationError); // labels must be 1..2n
  EXPECT_THROW(parse_pd(""), PdValidationError);
}

TEST(ParsePd, InconsistentOrientationIsRejected) {
  // Second crossing runs the under-strand against the first one's direction.
  EXPECT_THROW(parse_pd("X[1,3,2,4] X[1,3,2,4]"), PdValidationError);
}

TEST(ParsePd, SyntaxErrorsCarryPosition) {
  try {
    parse_pd("X[1,4,2,5] X[3,6;4,1]");
    FAIL();
  } catch (const PdSyntaxError &e) {
    EXPECT_EQ(e.position, 16u);
  }
  EXPECT_THROW(parse_pd("X[1,4,2]"), PdSyntaxError);
  EXPECT_THROW(parse_pd("Y[1]"), PdSyntaxError);
  EXPECT_THROW(parse_pd("X[0,1,1,2]"), PdSyntaxError);
}

TEST(Signs, TrefoilIsHomogeneous) {
  const Diagram d = parse_pd(kTrefoilPd);
  for (int c = 0; c < 3; ++c)
    EXPECT_EQ(d.sign(c), -1);
  EXPECT_EQ(d.writhe(), -3);
  EXPECT_EQ(mirror_of(d).writhe(), 3);
  EXPECT_THROW(d.sign(3), std::out_of_range);
}

TEST(Signs, KinkAndUnknot) {
  const Diagram kink = parse_pd(kKinkPd);
  EXPECT_EQ(kink.writhe(), kink.sign(0));
  EXPECT_EQ(kink.sign(0), +1);
  EXPECT_EQ(unknot_diagram().writhe(), 0);
  EXPECT_EQ(parse_pd(kHopfPd).writhe(), -2);
}

TEST(CrossingChange, InvolutionAndWrithe) {
  const Diagram d = parse_pd(kTrefoilPd);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Diagram once = crossing_change(d, c);
    EXPECT_EQ(crossing_change(once, c), d);
    EXPECT_EQ(once.writhe(), d.writhe() - 2 * d.sign(c));
    EXPECT_EQ(once.sign(c), -d.sign(c));
    for (int other = 0; other < d.crossing_count(); ++other)
      if (other != c)
        EXPECT_EQ(once.tuple(other), d.tuple(other));
  }
  EXPECT_THROW(crossing_change(d, -1), std::out_of_range);
}

TEST(CrossingChange, PreservesComponentOrientationInLinks) {
  const Diagram hopf = parse_pd(kHopfPd);
  const Diagram changed = crossing_change(hopf, 0);
  EXPECT_EQ(changed.writhe(), 0);
  EXPECT_EQ(changed.component_count(), 2);
  EXPECT_EQ(crossing_change(changed, 0), hopf);
}

TEST(Mirror, Involution) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_EQ(mirror_of(mirror_of(d)), d);
  EXPECT_EQ(mirror_of(d).writhe(), -d.writhe());
  for (int c = 0; c < 3; ++c)
    EXPECT_EQ(mirror_of(d).sign(c), -d.sign(c));
}

TEST(Smooth, KinkOutcomes) {
  const Diagram kink = parse_pd(kKinkPd);
  EXPECT_EQ(smooth(kink, 0, Splice::A).free_circles(), 2);
  EXPECT_EQ(smooth(kink, 0, Splice::B).free_circles(), 1);
  EXPECT_EQ(smooth(kink, 0, Splice::A).crossing_count(), 0);
}

TEST(Smooth, DecrementsCrossingsAndStaysValid) {
  const Diagram d = parse_pd(kTrefoilPd);
  for (int c = 0; c < 3; ++c)
    for (const Splice s : {Splice::A, Splice::B}) {
      const Diagram r = smooth(d, c, s);
      EXPECT_EQ(r.crossing_count(), 2);
      // Round-trips through the strict parser.
      EXPECT_EQ(parse_pd(r.to_pd()).crossing_count(), 2);
    }
}

TEST(Smooth, OrientedSmoothingRelations) {
  const Diagram d = parse_pd(kTrefoilPd);
  for (int c = 0; c < 3; ++c) {
    ASSERT_EQ(d.sign(c), -1);
    const Diagram l0 = oriented_smoothing(d, c);
    EXPECT_EQ(d.writhe(), l0.writhe() - 1);
    EXPECT_EQ(l0.component_count(), 2);
    EXPECT_EQ(d.crossing_count(), l0.crossing_count() + 1);
  }
  const Diagram hopf = parse_pd(kHopfPd);
  for (int c = 0; c < 2; ++c) {
    const Diagram l0 = oriented_smoothing(hopf, c);
    EXPECT_EQ(l0.component_count(), 1);
    EXPECT_EQ(l0.crossing_count(), 1);
  }
}

TEST(SkeinTriple, Construction) {
  const Diagram d = parse_pd(kTrefoilPd);
  const SkeinTriple t = skein_triple(d, 1);
  EXPECT_EQ(t.l_minus, d);
  EXPECT_EQ(t.l_plus, crossing_change(d, 1));
  EXPECT_EQ(t.l_zero.crossing_count(), 2);
  int differing = 0;
  for (int c = 0; c < 3; ++c)
    differing += t.l_plus.tuple(c) != t.l_minus.tuple(c);
  EXPECT_EQ(differing, 1);

  const Diagram m = mirror_of(d);
  const SkeinTriple u = skein_triple(m, 0);
  EXPECT_EQ(u.l_plus, m);
}

TEST(Predicates, Alternating) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_TRUE(is_alternating_diagram(d));
  EXPECT_FALSE(is_alternating_diagram(crossing_change(d, 0)));
  EXPECT_TRUE(is_alternating_diagram(unknot_diagram()));
  EXPECT_TRUE(is_alternating_diagram(parse_pd(kHopfPd)));
}

TEST(Predicates, Split) {
  const Diagram d = parse_pd(kTrefoilPd);
  EXPECT_FALSE(is_split_diagram(d));
  EXPECT_FALSE(is_split_diagram(parse_pd(kHopfPd)));
  const Diagram two = disjoint_union(d, d);
  EXPECT_TRUE(is_split_diagram(two));
  EXPECT_EQ(underlying_components(two), 2);
  EXPECT_EQ(two.component_count(), 2);
  EXPECT_TRUE(is_split_diagram(parse_pd("O[1] O[2]")));
  EXPECT_FALSE(is_split_diagram(unknot_diagram()));
}

TEST(Predicates, Reduced) {
  EXPECT_TRUE(is_reduced(parse_pd(kTrefoilPd)));
  EXPECT_FALSE(is_reduced(parse_pd(kKinkPd)));
  EXPECT_TRUE(is_reduced(parse_pd(kHopfPd)));
  const Diagram kinked = parse_pd(kKinkedTrefoilPd);
  EXPECT_FALSE(is_reduced(kinked));
  EXPECT_TRUE(is_nugatory(kinked, 3));
  EXPECT_FALSE(is_nugatory(kinked, 0));
  EXPECT_THROW(is_reduced(disjoint_union(parse_pd(kTrefoilPd), parse_pd(kTrefoilPd))),
               PreconditionError);
}

TEST(Predicates, BundledAlternatingDiagramsAreReduced) {
  for (const KnotRecord *r : testing::records(true, 10)) {
    EXPECT_TRUE(is_alternating_diagram(r->diagram)) << r->name;
    EXPECT_FALSE(is_split_diagram(r->diagram)) << r->name;
    EXPECT_TRUE(is_reduced(r->diagram)) << r->name;
  }
}

TEST(DiagramProperty, OperationsPreserveValidity) {
  // Every derived diagram must survive a round trip through the strict parser.
  for (const KnotRecord *r : testing::records(false, 8)) {
    const Diagram &d = r->diagram;
    for (int c = 0; c < d.crossing_count(); ++c) {
      for (const Diagram &x : {crossing_change(d, c), mirror_of(d), smooth(d, c, Splice::A),
                               smooth(d, c, Splice::B)}) {
        if (x.crossing_count() == 0)
          continue;
        const Diagram back = parse_pd(x.to_pd());
        ASSERT_EQ(back.crossing_count(), x.crossing_count()) << r->name;
        ASSERT_EQ(back.component_count(), x.component_count()) << r->name;
      }
      ASSERT_EQ(smooth(d, c, Splice::A).crossing_count(), d.crossing_count() - 1);
      ASSERT_EQ(crossing_change(crossing_change(d, c), c), d) << r->name;
      ASSERT_EQ(crossing_change(d, c).writhe(), d.writhe() - 2 * d.sign(c)) << r->name;
    }
  }
}

TEST(DiagramProperty, NegativeCrossingSmoothingRelations) {
  for (const KnotRecord *r : testing::records(true, 9)) {
    const Diagram &d = r->diagram;
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (d.sign(c) != -1)
        continue;
      const Diagram l0 = oriented_smoothing(d, c);
      ASSERT_EQ(d.writhe(), l0.writhe() - 1) << r->name;
      ASSERT_EQ(d.crossing_count(), l0.crossing_count() + 1) << r->name;
    }
  }
}

} // namespace
} // namespace knotx
