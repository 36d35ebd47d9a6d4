#include <gtest/gtest.h>

#include <random>

#include "bezout/bigrat.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"
#include "bezout/parser.hpp"
#include "bezout/upoly.hpp"

using namespace bezout;

namespace {

QPoly qx() { return QPoly::x(); }
MPoly X() { return MPoly::x(); }
MPoly Y() { return MPoly::y(); }
MPoly Z() { return MPoly::z(); }

}  // namespace

// ---------------------------------------------------------------------------
// BigRat

TEST(BigRat, NormalizesSignAndLowestTerms) {
  const BigRat a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
}

TEST(BigRat, ZeroDenominatorThrows) { EXPECT_THROW(BigRat(BigInt(1), BigInt(0)), DivisionByZero); }

TEST(BigRat, InverseOfZeroThrows) { EXPECT_THROW(BigRat(0).inverse(), DivisionByZero); }

TEST(BigRat, ExactArithmetic) {
  const BigRat third(BigInt(1), BigInt(3));
  EXPECT_EQ(third + third + third, BigRat(1));
  EXPECT_EQ(BigRat(BigInt(2), BigInt(3)) * BigRat(BigInt(9), BigInt(4)), BigRat(BigInt(3), BigInt(2)));
  EXPECT_EQ(BigRat(1) / BigRat(7) - BigRat(BigInt(1), BigInt(7)), BigRat(0));
  EXPECT_LT(BigRat(BigInt(-1), BigInt(2)), BigRat(BigInt(1), BigInt(3)));
}

TEST(BigRat, ParsesIntegersAndFractions) {
  EXPECT_EQ(BigRat::parse("-12/8"), BigRat(BigInt(-3), BigInt(2)));
  EXPECT_EQ(BigRat::parse("123456789012345678901234567890").numerator(),
            BigInt("123456789012345678901234567890"));
}

TEST(BigRat, LargeValuesStayExact) {
  BigRat f(1);
  for (int i = 1; i <= 40; ++i) f = f * BigRat(i);
  BigRat g = f;
  for (int i = 40; i >= 1; --i) g = g / BigRat(i);
  EXPECT_EQ(g, BigRat(1));
  EXPECT_EQ(f.numerator(), BigInt("815915283247897734345611269596115894272000000000"));
}

// ---------------------------------------------------------------------------
// UPoly

TEST(UPoly, TrimsAndReportsDegree) {
  const QPoly p{BigRat(1), BigRat(0), BigRat(0)};
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(QPoly().degree(), -1);
  EXPECT_TRUE(QPoly().is_zero());
}

TEST(UPoly, DivmodReconstructs) {
  const QPoly a = qx() * qx() * qx() * qx() + QPoly(3) * qx() - QPoly(1);
  const QPoly b = QPoly(2) * qx() * qx() + QPoly(1);
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
}

TEST(UPoly, DivisionByZeroThrows) { EXPECT_THROW(divmod(qx(), QPoly()), DivisionByZero); }

TEST(UPoly, GcdIsMonic) {
  const QPoly a = (qx() - QPoly(1)) * (qx() + QPoly(2)) * QPoly(3);
  const QPoly b = (qx() - QPoly(1)) * (qx() - QPoly(5)) * QPoly(7);
  EXPECT_EQ(gcd(a, b), qx() - QPoly(1));
}

TEST(UPoly, ExtendedGcdBezoutIdentity) {
  const QPoly a = qx() * qx() * qx() - QPoly(2);
  const QPoly b = qx() * qx() + qx() + QPoly(1);
  const auto [g, s, t] = xgcd(a, b);
  EXPECT_EQ(g, QPoly(1));
  EXPECT_EQ(s * a + t * b, g);
}

TEST(UPoly, ResultantMatchesSylvesterConvention) {
  // Reference value from an independent computer algebra system.
  const QPoly f = qx() * qx() * qx() + QPoly(2) * qx() - QPoly(5);
  const QPoly g = QPoly(3) * qx() * qx() - qx() + QPoly(7);
  EXPECT_EQ(resultant(f, g), BigRat(916));
  EXPECT_EQ(sylvester_resultant(f, g), BigRat(916));
}

TEST(UPoly, ResultantOverPolynomialRing) {
  // Res_x(x^2 + y x + 1, y x^2 - x + y) = y^4 + 2 y^2 + 1
  using YPoly = UPoly<QPoly>;
  const QPoly y = QPoly::x();
  const YPoly a{QPoly(1), y, QPoly(1)};
  const YPoly b{y, QPoly(-1), y};
  const QPoly expect{BigRat(1), BigRat(0), BigRat(2), BigRat(0), BigRat(1)};
  EXPECT_EQ(resultant(a, b), expect);
  EXPECT_EQ(sylvester_resultant(a, b), expect);
}

TEST(UPoly, ResultantZeroIffCommonFactor) {
  const QPoly f = (qx() - QPoly(2)) * (qx() + QPoly(1));
  const QPoly g = (qx() - QPoly(2)) * qx();
  EXPECT_TRUE(resultant(f, g).is_zero());
}

TEST(UPoly, ResultantAgreesWithBareissOnRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-7, 7), d(1, 7);
  for (int t = 0; t < 50; ++t) {
    std::vector<BigRat> a(d(rng) + 1), b(d(rng) + 1);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    a.back() = a.back().is_zero() ? BigRat(1) : a.back();
    b.back() = b.back().is_zero() ? BigRat(-1) : b.back();
    const QPoly p(a), q(b);
    EXPECT_EQ(resultant(p, q), sylvester_resultant(p, q));
  }
}

TEST(UPoly, ComposeLinear) {
  const QPoly p = qx() * qx();
  EXPECT_EQ(p.compose_linear(BigRat(2), BigRat(1)), QPoly(4) * qx() * qx() + QPoly(4) * qx() + QPoly(1));
}

// ---------------------------------------------------------------------------
// MPoly / HPoly

TEST(MPoly, GradedLexPrinting) {
  const MPoly p = Y() * Y() * Z() - X().pow(3);
  EXPECT_EQ(p.to_string(), "-x^3+y^2*z");
  EXPECT_EQ((X() * X() * Y()).scaled(BigRat(BigInt(3), BigInt(4))).to_string(), "3/4*x^2*y");
  EXPECT_EQ(MPoly().to_string(), "0");
}

TEST(MPoly, HomogeneityAndDegrees) {
  const MPoly p = Y() * Y() * Z() - X().pow(3);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.total_degree(), 3);
  EXPECT_EQ(p.degree_in(Var::X), 3);
  EXPECT_FALSE((X() + Y() * Y()).is_homogeneous());
}

TEST(MPoly, HomogenizeAffineCurve) {
  EXPECT_EQ(homogenize(Y() * Y() - X().pow(3)).poly(), Y() * Y() * Z() - X().pow(3));
  EXPECT_THROW(homogenize(Z()), UsageError);
}

TEST(MPoly, HPolyRejectsNonHomogeneous) {
  EXPECT_THROW(HPoly(X() + Y() * Y()), UsageError);
  EXPECT_THROW(HPoly{MPoly{}}, UsageError);
}

TEST(MPoly, ExactDivision) {
  const MPoly a = (X() - Y()) * (X() * Z() + Y() * Y());
  EXPECT_EQ(divide_exact(a, X() - Y()), X() * Z() + Y() * Y());
  EXPECT_THROW(divide_exact(a, X() + Y()), InternalError);
}

TEST(MPoly, LinearSubstitution) {
  const MPoly p = X() * Y();
  EXPECT_EQ(p.substituted_linear({X() + Z(), Y() - Z(), Z()}), X() * Y() - X() * Z() + Y() * Z() - Z() * Z());
}

TEST(MPoly, XYRoundTrip) {
  const MPoly p = Y() * Y() * Z() - X() * X() * (X() + Z());
  EXPECT_EQ(from_xy(to_xy(p), 3), p);
}

// ---------------------------------------------------------------------------
// Number fields

TEST(NumberField, SqrtTwoArithmetic) {
  const auto K = NumberField::unchecked(QPoly{BigRat(-2), BigRat(0), BigRat(1)});
  const NFElem b = NFElem::generator(K);
  EXPECT_EQ(b * b, NFElem(2));
  EXPECT_EQ((NFElem(1) + b).inverse(), b - NFElem(1));
  EXPECT_EQ((b * NFElem(3)) / b, NFElem(3));
}

TEST(NumberField, CubeRootInverse) {
  const auto K = NumberField::unchecked(QPoly{BigRat(-2), BigRat(0), BigRat(0), BigRat(1)});
  const NFElem t = NFElem::generator(K);
  const NFElem e = t * t + t + NFElem(1);
  EXPECT_EQ(e * e.inverse(), NFElem(1));
}

TEST(NumberField, MismatchedFieldsThrow) {
  const auto K = NumberField::unchecked(QPoly{BigRat(-2), BigRat(0), BigRat(1)});
  const auto L = NumberField::unchecked(QPoly{BigRat(-3), BigRat(0), BigRat(1)});
  EXPECT_THROW(NFElem::generator(K) + NFElem::generator(L), UsageError);
}

TEST(NumberField, InverseOfZeroThrows) {
  const auto K = NumberField::unchecked(QPoly{BigRat(-2), BigRat(0), BigRat(1)});
  EXPECT_THROW(NFElem(K, QPoly()).inverse(), DivisionByZero);
}

// ---------------------------------------------------------------------------
// Parser

TEST(Parser, CurveOfFirstExample) {
  EXPECT_EQ(parse_poly("y^2*z - x^3"), Y() * Y() * Z() - X().pow(3));
}

TEST(Parser, Juxtaposition) {
  EXPECT_EQ(parse_poly("2x^2y"), (X() * X() * Y()).scaled(2));
  EXPECT_EQ(parse_poly("(x+1)(x-1)"), X() * X() - MPoly(1));
  EXPECT_EQ(parse_poly("x -y"), X() - Y());
}

TEST(Parser, RationalLiterals) {
  EXPECT_EQ(parse_poly("3/4x"), X().scaled(BigRat(BigInt(3), BigInt(4))));
  EXPECT_EQ(parse_poly("0.25*y"), Y().scaled(BigRat(BigInt(1), BigInt(4))));
  EXPECT_EQ(parse_poly("-x^2"), -(X() * X()));
  EXPECT_EQ(parse_poly("x*-y"), -(X() * Y()));
  EXPECT_EQ(parse_poly("010x"), X().scaled(10));
  EXPECT_EQ(parse_poly("0.075"), MPoly(BigRat(BigInt(3), BigInt(40))));
}

TEST(Parser, PowerBindsTighterThanProduct) {
  EXPECT_EQ(parse_poly("2x^3"), X().pow(3).scaled(2));
  EXPECT_EQ(parse_poly("(x+y)^2"), X() * X() + (X() * Y()).scaled(2) + Y() * Y());
}

TEST(Parser, TrailingOperatorReportsOffset) {
  try {
    parse_poly("x +");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
}

TEST(Parser, Rejections) {
  EXPECT_THROW(parse_poly("w"), ParseError);
  EXPECT_THROW(parse_poly("x^-1"), ParseError);
  EXPECT_THROW(parse_poly("x^1.5"), ParseError);
  EXPECT_THROW(parse_poly("(x"), ParseError);
  EXPECT_THROW(parse_poly("x)"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("1/0"), ParseError);
  EXPECT_THROW(parse_poly("x/y"), ParseError);
}

TEST(Parser, PrintParseRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-20, 20), e(0, 4), den(1, 6);
  for (int t = 0; t < 100; ++t) {
    MPoly p;
    for (int k = 0; k < 6; ++k) p.add_term(Monomial(e(rng), e(rng), e(rng)), BigRat(BigInt(c(rng)), BigInt(den(rng))));
    EXPECT_EQ(parse_poly(p.to_string()), p) << p.to_string();
  }
}
