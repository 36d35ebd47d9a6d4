#ifndef BEZOUT_VERIFICATION_HPP
#define BEZOUT_VERIFICATION_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bezout/cycle.hpp"
#include "bezout/factor.hpp"
#include "bezout/gcd.hpp"
#include "bezout/intersection.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"
#include "bezout/resultant.hpp"

namespace bezout {

inline bool bezout_check(const Cycle& c, int m, int n) {
  return c.all_positive() && c.size() == static_cast<std::int64_t>(m) * n;
}

/// Exact membership of a whole Galois orbit in the curve A = 0.
inline bool on_curve(const HPoly& A, const GaloisCycle& gc) {
  switch (gc.kind()) {
    case GaloisCycle::Kind::PInf:
      return A.poly().coeff(Monomial(A.degree(), 0, 0)).is_zero();
    case GaloisCycle::Kind::C0: {
      const MPoly at_infinity = A.poly().substituted(Var::Z, BigRat(0));
      if (at_infinity.is_zero()) return true;
      return divmod(binary_dehomogenize(at_infinity, Var::X, Var::Y), gc.f()).second.is_zero();
    }
    case GaloisCycle::Kind::C1: {
      const FieldPtr field = NumberField::unchecked(gc.g());
      const NFPoly a = to_xy(A.poly()).map([&](const QPoly& c) { return NFElem(field, c); });
      if (a.is_zero()) return true;
      return divmod(a, gc.h_over(field)).second.is_zero();
    }
  }
  return false;
}

/// First cycle of c not lying on both curves, if any.
inline std::optional<GaloisCycle> first_off_curve(const Cycle& c, const HPoly& A, const HPoly& B) {
  for (const auto& [gc, k] : c.entries())
    if (!on_curve(A, gc) || !on_curve(B, gc)) return gc;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Projection oracle

using IntMatrix3 = std::array<std::array<int, 3>, 3>;

inline long long determinant(const IntMatrix3& m) {
  return 1LL * m[0][0] * (1LL * m[1][1] * m[2][2] - 1LL * m[1][2] * m[2][1]) -
         1LL * m[0][1] * (1LL * m[1][0] * m[2][2] - 1LL * m[1][2] * m[2][0]) +
         1LL * m[0][2] * (1LL * m[1][0] * m[2][1] - 1LL * m[1][1] * m[2][0]);
}

/// F(M (x,y,z)^T).
inline HPoly transform(const HPoly& F, const IntMatrix3& m) {
  std::array<MPoly, 3> images;
  for (int i = 0; i < 3; ++i)
    images[i] = MPoly::x().scaled(m[i][0]) + MPoly::y().scaled(m[i][1]) + MPoly::z().scaled(m[i][2]);
  return HPoly(F.poly().substituted_linear(images));
}

struct OracleReport {
  enum class Verdict { Pass, Fail, Inconclusive };

  bool sheared = false;
  IntMatrix3 shear{};
  MPoly resultant;
  /// Irreducible factors of the resultant in y, z, monic in y (z itself for
  /// the line at infinity), sorted.
  std::vector<std::pair<MPoly, std::int64_t>> resultant_factors;
  /// Lines predicted by the transformed cycle.
  std::vector<std::pair<MPoly, std::int64_t>> projection;
  Cycle transformed_cycle;
  Verdict verdict = Verdict::Inconclusive;
  std::string message;

  bool passed() const { return verdict == Verdict::Pass; }
};

inline const char* verdict_name(OracleReport::Verdict v) {
  switch (v) {
    case OracleReport::Verdict::Pass: return "pass";
    case OracleReport::Verdict::Fail: return "fail";
    case OracleReport::Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace detail {

using FactorList = std::vector<std::pair<MPoly, std::int64_t>>;

inline void add_factor(FactorList& list, const MPoly& f, std::int64_t k) {
  if (k == 0) return;
  for (auto& [g, m] : list)
    if (g == f) {
      m += k;
      return;
    }
  list.emplace_back(f, k);
}

inline void sort_factor_list(FactorList& list) {
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree()) return a.first.total_degree() < b.first.total_degree();
    return a.first.to_string() < b.first.to_string();
  });
}

inline std::string describe(const FactorList& list) {
  std::string s;
  for (const auto& [f, k] : list) {
    if (!s.empty()) s += " ";
    s += "(" + f.to_string() + ")^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

/*
 * After a coordinate change putting (1,0,0) on neither curve,
 *
 *   Res_x(A, B)(y, z) = c * prod_P (z_P y - y_P z)^{i_P(A,B)}
 *
 * so the factorization of the resultant must agree with the cycle projected
 * from (1,0,0). Only the polynomial and factorization layers are shared with
 * the Euclid path.
 */
inline OracleReport resultant_oracle(const HPoly& A, const HPoly& B, std::uint64_t seed, int max_attempts = 32) {
  OracleReport rep;
  if (A.is_constant() || B.is_constant()) throw UsageError("resultant_oracle needs nonconstant curves");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);

  IntMatrix3 m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  std::optional<HPoly> a2, b2;
  for (int attempt = 0; attempt <= max_attempts; ++attempt) {
    if (attempt > 0) {
      do {
        for (auto& row : m)
          for (auto& v : row) v = entry(rng);
      } while (determinant(m) == 0);
    }
    HPoly ta = transform(A, m), tb = transform(B, m);
    if (ta.degree_x() == ta.degree() && tb.degree_x() == tb.degree()) {
      a2 = std::move(ta);
      b2 = std::move(tb);
      rep.sheared = attempt > 0;
      break;
    }
  }
  rep.shear = m;
  if (!a2) {
    rep.message = "no admissible coordinate change in " + std::to_string(max_attempts) + " attempts";
    return rep;
  }

  rep.resultant = resultant_x(*a2, *b2);
  if (rep.resultant.is_zero()) {
    rep.verdict = OracleReport::Verdict::Fail;
    rep.message = "resultant vanishes: the curves share a component";
    return rep;
  }
  if (rep.resultant.total_degree() != A.degree() * B.degree()) {
    rep.verdict = OracleReport::Verdict::Fail;
    rep.message = "resultant has degree " + std::to_string(rep.resultant.total_degree());
    return rep;
  }
  const BinaryFactorization bf = factor_homog_bivariate(rep.resultant, Var::Y, Var::Z);
  detail::add_factor(rep.resultant_factors, MPoly::z(), bf.v_power);
  for (const auto& [g, k] : bf.affine.factors)
    detail::add_factor(rep.resultant_factors, binary_homogenize(g, g.degree(), Var::Y, Var::Z), k);
  detail::sort_factor_list(rep.resultant_factors);

  rep.transformed_cycle = intersection_cycle(*a2, *b2);
  for (const auto& [gc, k] : rep.transformed_cycle.entries()) {
    switch (gc.kind()) {
      case GaloisCycle::Kind::PInf:
        rep.verdict = OracleReport::Verdict::Fail;
        rep.message = "(1,0,0) lies on a curve after the coordinate change";
        return rep;
      case GaloisCycle::Kind::C0:
        detail::add_factor(rep.projection, MPoly::z(), k * gc.f().degree());
        break;
      case GaloisCycle::Kind::C1:
        detail::add_factor(rep.projection, binary_homogenize(gc.g(), gc.g().degree(), Var::Y, Var::Z),
                           k * gc.h().degree());
        break;
    }
  }
  detail::sort_factor_list(rep.projection);

  if (rep.projection == rep.resultant_factors) {
    rep.verdict = OracleReport::Verdict::Pass;
  } else {
    rep.verdict = OracleReport::Verdict::Fail;
    rep.message = "resultant factors " + detail::describe(rep.resultant_factors) + " but cycle projects to " +
                  detail::describe(rep.projection);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Random samples

namespace sample {

using Rng = std::mt19937_64;

/// Small nonzero rational, mostly integral.
inline BigRat coefficient(Rng& rng) {
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), sign(0, 1), frac(0, 4);
  BigRat c(num(rng));
  if (frac(rng) == 0) c = BigRat(num(rng), den(rng));
  return sign(rng) ? -c : c;
}

/// Random form of the given degree; each monomial present with the given
/// probability, never zero.
inline HPoly form(Rng& rng, int degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  for (;;) {
    MPoly p;
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j)
        if (keep(rng)) p.add_term(Monomial(i, j, degree - i - j), coefficient(rng));
    if (!p.is_zero()) return HPoly(std::move(p));
  }
}

inline int degree(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coprime(const HPoly& a, const HPoly& b) { return gcd_homogeneous(a, b).is_constant(); }

/// Pair of coprime nonconstant forms with degrees in [1, max_degree].
inline std::pair<HPoly, HPoly> coprime_pair(Rng& rng, int max_degree) {
  for (;;) {
    HPoly a = form(rng, degree(rng, 1, max_degree)), b = form(rng, degree(rng, 1, max_degree));
    if (coprime(a, b)) return {std::move(a), std::move(b)};
  }
}

inline Line<BigRat> line(Rng& rng) {
  std::uniform_int_distribution<int> zero(0, 3);
  for (;;) {
    Line<BigRat> l{zero(rng) ? coefficient(rng) : BigRat(0), zero(rng) ? coefficient(rng) : BigRat(0),
                   zero(rng) ? coefficient(rng) : BigRat(0)};
    if (!(l.a1.is_zero() && l.a2.is_zero() && l.a3.is_zero())) return l;
  }
}

inline HPoly line_form(const Line<BigRat>& l) {
  return HPoly(MPoly::x().scaled(l.a1) + MPoly::y().scaled(l.a2) + MPoly::z().scaled(l.a3));
}

}  // namespace sample

// ---------------------------------------------------------------------------
// Property harness

struct PropertyCheck {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::optional<std::string> counterexample;

  void record(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (!counterexample) counterexample = what;
    }
  }
};

struct HarnessReport {
  std::vector<PropertyCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.failed == 0; });
  }
  const PropertyCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string pair_text(const HPoly& a, const HPoly& b) { return "A=" + a.to_string() + ", B=" + b.to_string(); }

/// Runs f and turns any exception into a failed check.
template <class F>
void guarded(PropertyCheck& check, const std::string& context, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    check.record(false, context + ": " + e.what());
  }
}

}  // namespace detail

inline HarnessReport property_harness(int trials, int max_degree, std::uint64_t seed) {
  HarnessReport rep;
  for (const char* n : {"symmetry", "additivity", "shift", "scalar", "strategy", "bezout", "membership", "lines"})
    rep.checks.emplace_back().name = n;
  auto check = [&](const char* n) -> PropertyCheck& {
    for (auto& c : rep.checks)
      if (c.name == n) return c;
    throw InternalError("unknown check");
  };
  if (trials <= 0) return rep;
  max_degree = std::max(1, max_degree);
  const int small = std::min(max_degree, 3);
  sample::Rng rng(seed);

  for (int t = 0; t < trials; ++t) {
    const auto [A, B] = sample::coprime_pair(rng, max_degree);
    const std::string ctx = detail::pair_text(A, B);
    Cycle ab;
    bool have_ab = false;
    detail::guarded(check("bezout"), ctx, [&] {
      ab = intersection_cycle(A, B);
      have_ab = true;
      check("bezout").record(bezout_check(ab, A.degree(), B.degree()), ctx + " gives " + ab.to_string());
    });
    if (have_ab) {
      const auto off = first_off_curve(ab, A, B);
      check("membership").record(!off, ctx + ": " + (off ? off->to_string() : std::string()));
      detail::guarded(check("symmetry"), ctx, [&] {
        const Cycle ba = intersection_cycle(B, A);
        check("symmetry").record(ab == ba, ctx + ": " + ab.to_string() + " vs " + ba.to_string());
      });
      detail::guarded(check("scalar"), ctx, [&] {
        const BigRat l = sample::coefficient(rng), m = sample::coefficient(rng);
        const Cycle s = intersection_cycle(A.scaled(l), B.scaled(m));
        check("scalar").record(ab == s, ctx + " scaled by " + l.to_string() + ", " + m.to_string());
      });
      detail::guarded(check("strategy"), ctx, [&] {
        const Cycle p = intersection_cycle(A, B, {false, DivisionStrategy::Pseudo});
        check("strategy").record(ab == p, ctx + ": " + ab.to_string() + " vs " + p.to_string());
      });
    }

    // A.(BC) = A.B + A.C
    {
      HPoly a = sample::form(rng, sample::degree(rng, 1, small));
      HPoly b = sample::form(rng, sample::degree(rng, 1, small));
      HPoly c = sample::form(rng, sample::degree(rng, 1, small));
      while (!sample::coprime(a, b) || !sample::coprime(a, c)) {
        b = sample::form(rng, sample::degree(rng, 1, small));
        c = sample::form(rng, sample::degree(rng, 1, small));
      }
      const std::string actx = detail::pair_text(a, b) + ", C=" + c.to_string();
      detail::guarded(check("additivity"), actx, [&] {
        const Cycle lhs = intersection_cycle(a, b * c);
        const Cycle rhs = intersection_cycle(a, b) + intersection_cycle(a, c);
        check("additivity").record(lhs == rhs, actx + ": " + lhs.to_string() + " vs " + rhs.to_string());
      });
    }

    // A.(B + AC) = A.B
    {
      const int da = sample::degree(rng, 1, small), dc = sample::degree(rng, 0, small - 1);
      HPoly a = sample::form(rng, da), b = sample::form(rng, da + dc), c = sample::form(rng, dc);
      for (;;) {
        const MPoly shifted = b.poly() + a.poly() * c.poly();
        if (sample::coprime(a, b) && !shifted.is_zero() && shifted.is_homogeneous() &&
            shifted.total_degree() == b.degree())
          break;
        b = sample::form(rng, da + dc);
        c = sample::form(rng, dc);
      }
      const HPoly shifted(b.poly() + a.poly() * c.poly());
      const std::string sctx = detail::pair_text(a, b) + ", C=" + c.to_string();
      detail::guarded(check("shift"), sctx, [&] {
        const Cycle lhs = intersection_cycle(a, shifted), rhs = intersection_cycle(a, b);
        check("shift").record(lhs == rhs, sctx + ": " + lhs.to_string() + " vs " + rhs.to_string());
      });
    }

    // Two distinct lines meet once, with multiplicity one.
    {
      Line<BigRat> l1 = sample::line(rng), l2 = sample::line(rng);
      while (!sample::coprime(sample::line_form(l1), sample::line_form(l2))) l2 = sample::line(rng);
      const HPoly f1 = sample::line_form(l1), f2 = sample::line_form(l2);
      const std::string lctx = detail::pair_text(f1, f2);
      detail::guarded(check("lines"), lctx, [&] {
        const RatPoint<BigRat> p = line_point(l1, l2);
        const bool on_both = f1.poly().eval(p.x, p.y, p.z).is_zero() && f2.poly().eval(p.x, p.y, p.z).is_zero();
        const Cycle c = intersection_cycle(f1, f2);
        const Cycle expect{{point_cycle(p), 1}};
        check("lines").record(on_both && c == expect, lctx + ": " + c.to_string() + " vs " + expect.to_string());
      });
    }
  }
  return rep;
}

}  // namespace bezout

#endif  // BEZOUT_VERIFICATION_HPP
