#include <gtest/gtest.h>

#include <random>

#include "bezout/intersection.hpp"
#include "bezout/parser.hpp"
#include "bezout/verification.hpp"

using namespace bezout;

namespace {

HPoly H(const char* s) { return HPoly(parse_poly(s)); }
QPoly Q(std::initializer_list<BigRat> c) { return QPoly(c); }

const char* kEx1A = "y^2*z - x^3";
const char* kEx1B = "y^2*z - x^2*(x+z)";
const char* kEx2A =
    "(y-z)*x^5 + (y^2-y*z)*x^4 + (y^3-y^2*z)*x^3 + (-y^2*z^2+y*z^3)*x^2 + (-y^3*z^2+y^2*z^3)*x - y^4*z^2 + y^3*z^3";
const char* kEx2B = "(y^2-2*z^2)*x^2 + (y^3-2*y*z^2)*x + y^4 - y^2*z^2 - 2*z^4";

GaloisCycle c1(std::initializer_list<QPoly> h, std::initializer_list<BigRat> g) {
  return canonical_c1(XYPoly(std::vector<QPoly>(h)), QPoly(g));
}

}  // namespace

// ---------------------------------------------------------------------------
// Cycles

TEST(Cycle, Sizes) {
  EXPECT_EQ(GaloisCycle::pinf().size(), 1);
  EXPECT_EQ(canonical_c0(Q({1, 1, 1})).size(), 2);
  // h = x^3 - y over y^2 - 2
  EXPECT_EQ(c1({Q({0, -1}), Q({}), Q({}), Q({1})}, {-2, 0, 1}).size(), 6);
}

TEST(Cycle, AddScaleAndZeroWeights) {
  const GaloisCycle p = GaloisCycle::pinf();
  const GaloisCycle f = canonical_c0(Q({0, 1}));
  const Cycle a{{p, 2}, {f, 1}};
  const Cycle b{{f, 4}};
  EXPECT_EQ(size(a + b), 7);
  EXPECT_EQ((a + b).coefficient(f), 5);
  EXPECT_EQ(cycle_scale(a, 3).coefficient(p), 6);
  EXPECT_TRUE(cycle_scale(a, 0).empty());
  EXPECT_TRUE((a - a).empty());
  EXPECT_FALSE((b - a).all_positive());
  EXPECT_EQ(cycle_add(a, b), b + a);
}

TEST(Cycle, CanonicalFormIsUnique) {
  // (2x - 6; y - 4) and (x - 3; y - 4) are the same point.
  EXPECT_EQ(c1({Q({-6}), Q({2})}, {-4, 1}), c1({Q({-3}), Q({1})}, {-4, 1}));
  // Coefficients are reduced modulo g: x - y^3 over y^2 - 2 is x - 2y.
  EXPECT_EQ(c1({Q({0, 0, 0, -1}), Q({1})}, {-2, 0, 1}), c1({Q({0, -2}), Q({1})}, {-2, 0, 1}));
  EXPECT_EQ(canonical_c0(Q({3, 3, 3})), canonical_c0(Q({1, 1, 1})));
}

TEST(Cycle, CanonicalConstructorsCheckIrreducibility) {
  EXPECT_THROW(canonical_c0(Q({-1, 0, 1})), UsageError);
  EXPECT_THROW(canonical_c1(XYPoly{Q({-2}), Q({}), Q({1})}, Q({-2, 0, 1})), UsageError);
  EXPECT_THROW(canonical_c1(XYPoly{Q({0}), Q({1})}, Q({-1, 0, 1})), UsageError);
  EXPECT_THROW(canonical_c1(XYPoly{Q({1})}, Q({0, 1})), UsageError);
}

TEST(Cycle, OrderingAndText) {
  const Cycle c{{c1({Q({0}), Q({1})}, {0, 1}), 4}, {canonical_c0(Q({0, 1})), 5}, {GaloisCycle::pinf(), 1}};
  EXPECT_EQ(c.to_string(), "(1,0,0) + 5*C0(x) + 4*C1(x; y)");
  EXPECT_EQ(Cycle().to_string(), "0");
  EXPECT_LT(GaloisCycle::pinf(), canonical_c0(Q({0, 1})));
  EXPECT_LT(canonical_c0(Q({7, 1})), canonical_c0(Q({1, 1, 1})));
}

TEST(Cycle, HIsPrintedXFirst) {
  EXPECT_EQ(c1({Q({2}), Q({0, 1}), Q({1})}, {-2, 0, 1}).to_string(), "C1(x^2+x*y+2; y^2-2)");
}

// ---------------------------------------------------------------------------
// Lines and points

TEST(Lines, CrossProduct) {
  using L = Line<BigRat>;
  EXPECT_EQ(line_point(L{1, 0, 0}, L{0, 1, 0}), (RatPoint<BigRat>{0, 0, 1}));
  EXPECT_EQ(line_point(L{1, 1, -3}, L{1, -1, 1}), (RatPoint<BigRat>{1, 2, 1}));
  EXPECT_EQ(line_point(L{0, 1, 0}, L{0, 0, 1}), (RatPoint<BigRat>{1, 0, 0}));
  EXPECT_EQ(line_point(L{1, -2, 0}, L{0, 0, 1}), (RatPoint<BigRat>{2, 1, 0}));
  EXPECT_THROW(line_point(L{1, 2, 3}, L{2, 4, 6}), CommonComponentError);
  EXPECT_THROW(line_point(L{0, 0, 0}, L{2, 4, 6}), UsageError);
}

TEST(Lines, PointCycles) {
  EXPECT_EQ(point_cycle({BigRat(1), BigRat(2), BigRat(1)}), c1({Q({-1}), Q({1})}, {-2, 1}));
  EXPECT_EQ(point_cycle({BigRat(2), BigRat(1), BigRat(0)}), canonical_c0(Q({-2, 1})));
  EXPECT_EQ(point_cycle({BigRat(1), BigRat(0), BigRat(0)}), GaloisCycle::pinf());
}

TEST(Lines, IntersectionAgreesWithCrossProduct) {
  sample::Rng rng(41);
  for (int t = 0; t < 100; ++t) {
    const auto l1 = sample::line(rng), l2 = sample::line(rng);
    RatPoint<BigRat> p;
    try {
      p = line_point(l1, l2);
    } catch (const CommonComponentError&) {
      continue;
    }
    const Cycle c = intersection_cycle(sample::line_form(l1), sample::line_form(l2));
    EXPECT_EQ(c, (Cycle{{point_cycle(p), 1}}));
  }
}

// ---------------------------------------------------------------------------
// Base case

TEST(Intersect1Var, SecondExampleLine) {
  const Cycle c = intersect_1var(H(kEx2A), H("y^2 - 2*z^2"));
  const Cycle expect{{c1({Q({0, -1}), Q({}), Q({}), Q({1})}, {-2, 0, 1}), 1},
                     {c1({Q({2}), Q({0, 1}), Q({1})}, {-2, 0, 1}), 1},
                     {GaloisCycle::pinf(), 2}};
  EXPECT_EQ(c, expect);
}

TEST(Intersect1Var, PowersOfZ) {
  // z^3 against y^2 z - x^3: only the point (0,1,0), with multiplicity 3*3.
  EXPECT_EQ(intersect_1var(H(kEx1A), H("z^3")), (Cycle{{canonical_c0(Q({0, 1})), 9}}));
  EXPECT_EQ(intersect_1var(H("x - z"), H("y^2 - y*z")).size(), 2);
}

TEST(Intersect1Var, BothFreeOfX) {
  EXPECT_EQ(reduce(H("y^2 - 2*z^2"), H("y*z + z^2")), (Cycle{{GaloisCycle::pinf(), 4}}));
}

// ---------------------------------------------------------------------------
// Full intersections

TEST(Intersection, FirstExample) {
  const Cycle c = intersection_cycle(parse_poly(kEx1A), parse_poly(kEx1B));
  EXPECT_EQ(c, (Cycle{{c1({Q({0}), Q({1})}, {0, 1}), 4}, {canonical_c0(Q({0, 1})), 5}}));
  EXPECT_EQ(c.size(), 9);
}

TEST(Intersection, SecondExample) {
  const IntersectionResult r = intersect_curves(parse_poly(kEx2A), parse_poly(kEx2B));
  EXPECT_EQ(r.cycle.to_string(),
            "2*(1,0,0) + 2*C0(x^2+x+1) + C1(x^2+x+2; y-1) + C1(x^2+x*y+2; y^2-2) + C1(x^3-y; y^2-2) + "
            "C1(x+y; y^2+1) + C1(x-y^3; y^4+1)");
  EXPECT_EQ(r.cycle.size(), 24);
  EXPECT_EQ(r.bezout_number(), 24);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Intersection, SymmetricAndStrategyIndependent) {
  const Cycle ab = intersection_cycle(parse_poly(kEx2A), parse_poly(kEx2B));
  EXPECT_EQ(ab, intersection_cycle(parse_poly(kEx2B), parse_poly(kEx2A)));
  EXPECT_EQ(ab, intersection_cycle(parse_poly(kEx2A), parse_poly(kEx2B), {false, DivisionStrategy::Pseudo}));
}

TEST(Intersection, CircleAndHyperbola) {
  const Cycle c = intersection_cycle(parse_poly("x^2+y^2-1"), parse_poly("x*y-1"), {true, {}});
  EXPECT_EQ(c.to_string(), "C1(x+y^3-y; y^4-y^2+1)");
}

TEST(Intersection, CoordinateAxes) {
  EXPECT_EQ(intersection_cycle(H("x"), H("y")).to_string(), "C1(x; y)");
  EXPECT_EQ(intersection_cycle(H("y"), H("z")).to_string(), "(1,0,0)");
  EXPECT_EQ(intersection_cycle(H("x"), H("z")).to_string(), "C0(x)");
}

TEST(Intersection, Tangency) {
  EXPECT_EQ(intersection_cycle(H("y*z - x^2"), H("y")).to_string(), "2*C1(x; y)");
  // The line at infinity meets y z = x^2 only at (0,1,0).
  EXPECT_EQ(intersection_cycle(H("y*z - x^2"), H("z")).to_string(), "2*C0(x)");
}

TEST(Intersection, AffineHomogenizes) {
  const Cycle c = intersection_cycle(parse_poly("y - x^2"), parse_poly("y - 1"), {true, {}});
  EXPECT_EQ(c.to_string(), "C1(x-1; y-1) + C1(x+1; y-1)");
  EXPECT_EQ(intersection_cycle(parse_poly("y - x^2"), parse_poly("y - 2"), {true, {}}).to_string(), "C1(x^2-2; y-2)");
  EXPECT_THROW(intersection_cycle(parse_poly("y - x^2"), parse_poly("y - 1")), UsageError);
}

TEST(Intersection, ScalingDoesNotMatter) {
  EXPECT_EQ(intersection_cycle(H(kEx1A), H(kEx1B)), intersection_cycle(H("-3*(y^2*z - x^3)"), H(kEx1B)));
  EXPECT_EQ(intersection_cycle(H("1/2*x - 1/3*y"), H("z")), intersection_cycle(H("3*x - 2*y"), H("z")));
}

TEST(Intersection, CommonComponents) {
  try {
    intersection_cycle(H("x"), H("2*x"));
    FAIL();
  } catch (const CommonComponentError& e) {
    ASSERT_TRUE(e.common().has_value());
    EXPECT_EQ(e.common()->poly(), parse_poly("x"));
    EXPECT_STREQ(e.what(), "common component: x");
  }
  EXPECT_THROW(intersection_cycle(H("x*z"), H("y*z")), CommonComponentError);
  EXPECT_THROW(intersection_cycle(H("(x-y)*(x^2+y*z)"), H("(x^2+y*z)*(x+z)")), CommonComponentError);
}

TEST(Intersection, ConstantGivesEmptyCycleWithWarning) {
  const IntersectionResult r = intersect_curves(parse_poly("3"), parse_poly("x"));
  EXPECT_TRUE(r.cycle.empty());
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_THROW(intersect_curves(MPoly(), parse_poly("x")), UsageError);
}

// ---------------------------------------------------------------------------
// Verification

TEST(Verification, BezoutCheck) {
  const Cycle c = intersection_cycle(H(kEx1A), H(kEx1B));
  EXPECT_TRUE(bezout_check(c, 3, 3));
  EXPECT_FALSE(bezout_check(c, 3, 2));
  EXPECT_FALSE(bezout_check(Cycle() - c, 3, 3));
}

TEST(Verification, OnCurve) {
  const HPoly a = H(kEx2A);
  EXPECT_TRUE(on_curve(a, GaloisCycle::pinf()));
  EXPECT_TRUE(on_curve(a, canonical_c0(Q({1, 1, 1}))));
  EXPECT_TRUE(on_curve(a, c1({Q({0, -1}), Q({}), Q({}), Q({1})}, {-2, 0, 1})));
  EXPECT_FALSE(on_curve(H(kEx1A), GaloisCycle::pinf()));
  EXPECT_FALSE(on_curve(H(kEx1A), c1({Q({-1}), Q({1})}, {-2, 1})));
  EXPECT_TRUE(on_curve(H(kEx1A), c1({Q({-1}), Q({1})}, {1, 1})));
  EXPECT_TRUE(on_curve(H("z"), canonical_c0(Q({5, 0, 1}))));
}

TEST(Verification, EveryCycleLiesOnBothCurves) {
  const HPoly a = H(kEx2A), b = H(kEx2B);
  EXPECT_FALSE(first_off_curve(intersection_cycle(a, b), a, b).has_value());
  const Cycle wrong{{canonical_c0(Q({-1, 0, 1, 1})), 1}};
  EXPECT_TRUE(first_off_curve(wrong, a, b).has_value());
}

TEST(Verification, TransformAndDeterminant) {
  const IntMatrix3 swap{{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}};
  EXPECT_EQ(determinant(swap), -1);
  EXPECT_EQ(transform(H("x^2*y + z^3"), swap).poly(), parse_poly("y^2*x + z^3"));
}

TEST(Oracle, FirstExampleInIdentityFrame) {
  const OracleReport r = resultant_oracle(H(kEx1A), H(kEx1B), 1);
  EXPECT_TRUE(r.passed()) << r.message;
  EXPECT_FALSE(r.sheared);
  EXPECT_EQ(r.resultant.normalized(), parse_poly("y^4*z^5"));
}

TEST(Oracle, Lines) {
  const OracleReport r = resultant_oracle(H("x"), H("x + y"), 1);
  EXPECT_TRUE(r.passed()) << r.message;
  EXPECT_EQ(r.resultant, parse_poly("y"));
}

TEST(Oracle, SecondExampleNeedsShear) {
  const OracleReport r = resultant_oracle(H(kEx2A), H(kEx2B), 7);
  EXPECT_TRUE(r.passed()) << r.message;
  EXPECT_TRUE(r.sheared);
  EXPECT_NE(determinant(r.shear), 0);
}

TEST(Oracle, RandomPairs) {
  sample::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto [a, b] = sample::coprime_pair(rng, 3);
    if (a.is_constant() || b.is_constant()) continue;
    const OracleReport r = resultant_oracle(a, b, 1000 + t);
    EXPECT_TRUE(r.passed()) << a.to_string() << " / " << b.to_string() << ": " << r.message;
  }
}

TEST(Harness, ZeroTrialsIsEmptyAndPasses) {
  const HarnessReport r = property_harness(0, 3, 1);
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) EXPECT_EQ(c.passed + c.failed, 0);
}

TEST(Harness, SmallRunPasses) {
  const HarnessReport r = property_harness(12, 3, 9);
  EXPECT_TRUE(r.ok());
  for (const char* name : {"symmetry", "additivity", "shift", "scalar", "strategy", "bezout", "membership", "lines"}) {
    const PropertyCheck* c = r.find(name);
    ASSERT_NE(c, nullptr) << name;
    EXPECT_GT(c->passed, 0) << name;
    EXPECT_FALSE(c->counterexample.has_value()) << *c->counterexample;
  }
}

TEST(Intersection, RandomPairsSatisfyBezout) {
  sample::Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    const auto [a, b] = sample::coprime_pair(rng, 4);
    const IntersectionResult r = intersect_curves(a.poly(), b.poly());
    if (a.is_constant() || b.is_constant()) continue;
    EXPECT_TRUE(bezout_check(r.cycle, a.degree(), b.degree()));
    EXPECT_FALSE(first_off_curve(r.cycle, a, b).has_value());
  }
}
