#ifndef BEZOUT_INTERSECTION_HPP
#define BEZOUT_INTERSECTION_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bezout/cycle.hpp"
#include "bezout/division.hpp"
#include "bezout/factor.hpp"
#include "bezout/gcd.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"

namespace bezout {

/// The two curves share a nonconstant factor; the factor is carried along.
class CommonComponentError : public std::runtime_error {
 public:
  explicit CommonComponentError(const HPoly& common)
      : std::runtime_error("common component: " + common.to_string()), common_(common) {}
  explicit CommonComponentError(const std::string& what) : std::runtime_error(what) {}
  const std::optional<HPoly>& common() const { return common_; }

 private:
  std::optional<HPoly> common_;
};

// ---------------------------------------------------------------------------
// Lines

template <class T>
struct Line {
  T a1, a2, a3;  // a1*x + a2*y + a3*z
};

/// Projective point with the last nonzero coordinate scaled to 1.
template <class T>
struct RatPoint {
  T x, y, z;
  friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

/// The intersection of two distinct lines: the cross product of their
/// coefficient vectors, normalized.
template <class T>
RatPoint<T> line_point(const Line<T>& l1, const Line<T>& l2) {
  if (is_zero(l1.a1) && is_zero(l1.a2) && is_zero(l1.a3)) throw UsageError("line with all coefficients zero");
  if (is_zero(l2.a1) && is_zero(l2.a2) && is_zero(l2.a3)) throw UsageError("line with all coefficients zero");
  T px = l1.a2 * l2.a3 - l1.a3 * l2.a2;
  T py = l1.a3 * l2.a1 - l1.a1 * l2.a3;
  T pz = l1.a1 * l2.a2 - l1.a2 * l2.a1;
  if (!is_zero(pz)) return {px / pz, py / pz, T(1)};
  if (!is_zero(py)) return {px / py, T(1), T(0)};
  if (!is_zero(px)) return {T(1), T(0), T(0)};
  throw CommonComponentError("common component: the lines are proportional");
}

/// The Galois cycle of a rational point: (a,b,1) -> C1(x-a; y-b),
/// (a,1,0) -> C0(x-a), (1,0,0) -> PInf.
inline GaloisCycle point_cycle(const RatPoint<BigRat>& p) {
  if (p.z.is_one()) {
    const FieldPtr field = NumberField::unchecked(QPoly{-p.y, BigRat(1)});
    return GaloisCycle::c1(NFPoly{NFElem(-p.x), NFElem(1)}, field);
  }
  if (p.y.is_one()) return GaloisCycle::c0(QPoly{-p.x, BigRat(1)});
  return GaloisCycle::pinf();
}

// ---------------------------------------------------------------------------
// Euclid step

enum class DivisionStrategy {
  FractionField,  ///< H = lcm of the denominators of q and r
  Pseudo,         ///< H = lc_x(B)^(deg_x A - deg_x B + 1)
};

/// H'A = Q B' + R' with B = B'G, gcd(B', R') = gcd(B', H') = 1, and G, H'
/// free of x.
struct EuclidStep {
  HPoly Hp;
  HPoly Q;
  HPoly Bp;
  HPoly Rp;
  HPoly G;
};

namespace detail {

inline CommonComponentError common_component(const HPoly& A, const HPoly& B) {
  return CommonComponentError(gcd_homogeneous(A, B));
}

inline void check(bool ok, const char* what) {
  if (!ok) throw InternalError(what);
}

}  // namespace detail

inline EuclidStep euclid_step(const HPoly& A, const HPoly& B,
                              DivisionStrategy strategy = DivisionStrategy::FractionField) {
  if (B.degree_x() < 1) throw UsageError("euclid_step: divisor has x-degree 0");
  if (A.degree_x() < B.degree_x()) throw UsageError("euclid_step: needs deg_x A >= deg_x B");
  const ClearedDivision d =
      strategy == DivisionStrategy::FractionField ? clear_denominators(ff_divide(A, B)) : pseudo_divide(A, B);
  if (d.R.is_zero()) throw detail::common_component(A, B);
  const HPoly R(d.R);
  const HPoly G = gcd_homogeneous(B, R);
  if (G.degree_x() > 0) throw detail::common_component(A, B);
  HPoly Bp = divide_exact(B, G);
  HPoly Hp = divide_exact(d.H, G);
  HPoly Rp = divide_exact(R, G);
  HPoly Q(d.Q);
#ifndef NDEBUG
  detail::check(Hp.poly() * A.poly() == Q.poly() * Bp.poly() + Rp.poly(), "euclid_step: H'A != QB' + R'");
  detail::check(Rp.degree_x() < Bp.degree_x(), "euclid_step: no x-degree drop");
#endif
  return {std::move(Hp), std::move(Q), std::move(Bp), std::move(Rp), G};
}

// ---------------------------------------------------------------------------
// One-variable base case

/// C(x, b z, z) = z^e0 * (homogenized c(x)) with c(x) = C(x, b, 1) over K.
struct LineSubstitution {
  int z_power = 0;
  NFPoly c;
};

inline LineSubstitution substitute_line(const HPoly& C, const NFElem& beta) {
  std::vector<NFElem> coeffs(C.degree_x() + 1);
  std::vector<NFElem> powers{NFElem(1)};
  for (const auto& [m, c] : C.poly().terms()) {
    while (static_cast<int>(powers.size()) <= m.y()) powers.push_back(powers.back() * beta);
    coeffs[m.x()] = coeffs[m.x()] + powers[m.y()] * NFElem(c);
  }
  NFPoly c(std::move(coeffs));
  if (c.is_zero()) throw CommonComponentError("common component: the curve contains a line y = b*z");
  return {C.degree() - c.degree(), std::move(c)};
}

/// C . D for a binary form D(y, z): D splits into lines through (1,0,0).
inline Cycle intersect_1var(const HPoly& C, const HPoly& D) {
  if (D.degree_x() != 0) throw UsageError("intersect_1var: D must be free of x");
  Cycle out;
  if (C.is_constant() || D.is_constant()) return out;
  if (C.degree_x() == 0) {
    // Two families of lines through (1,0,0).
    if (!gcd_homogeneous(C, D).is_constant()) throw detail::common_component(C, D);
    out.add(GaloisCycle::pinf(), static_cast<std::int64_t>(C.degree()) * D.degree());
    return out;
  }
  const QPoly p = binary_dehomogenize(D.poly(), Var::Y, Var::Z);
  const int z_power = D.degree() - p.degree();

  if (z_power > 0) {
    // C . z = C(x, y, 0) . z
    const MPoly at_infinity = C.poly().substituted(Var::Z, BigRat(0));
    if (at_infinity.is_zero()) throw CommonComponentError(HPoly(MPoly::z()));
    const BinaryFactorization bf = factor_homog_bivariate(at_infinity, Var::X, Var::Y);
    Cycle cz;
    cz.add(GaloisCycle::pinf(), bf.v_power);
    for (const auto& [f, k] : bf.affine.factors) cz.add(GaloisCycle::c0(f), k);
    out += z_power * cz;
  }

  if (p.degree() > 0) {
    for (const auto& [g, mult] : factor_q(p).factors) {
      const FieldPtr field = NumberField::unchecked(g);
      const LineSubstitution sub = substitute_line(C, NFElem::generator(field));
      Cycle cg;
      cg.add(GaloisCycle::pinf(), static_cast<std::int64_t>(sub.z_power) * g.degree());
      if (sub.c.degree() > 0)
        for (const auto& [h, n] : factor_nf(sub.c, field).factors) cg.add(GaloisCycle::c1(h, field), n);
      out += mult * cg;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Recursive reduction

namespace detail {

inline Cycle reduce_primitive(HPoly A, HPoly B, DivisionStrategy strategy);

}  // namespace detail

/*
 * A . B for coprime nonconstant forms, through
 *
 *   A . B = R'.B' - H'.B' + A.G
 *
 * At each entry the x-contents are split off (additivity) and sent to the
 * one-variable case; the primitive parts go through one Euclid step.
 */
inline Cycle reduce(const HPoly& A, const HPoly& B, DivisionStrategy strategy = DivisionStrategy::FractionField) {
  Cycle out;
  if (A.is_constant() || B.is_constant()) return out;
  const XContent a = x_content(A), b = x_content(B);
  const bool a_content = !a.content.is_constant(), b_content = !b.content.is_constant();
  const bool a_prim = !a.primitive.is_constant(), b_prim = !b.primitive.is_constant();
  if (a_content && b_content) out += intersect_1var(a.content, b.content);
  if (a_content && b_prim) out += intersect_1var(b.primitive, a.content);
  if (b_content && a_prim) out += intersect_1var(a.primitive, b.content);
  if (a_prim && b_prim) out += detail::reduce_primitive(a.primitive, b.primitive, strategy);
  return out;
}

namespace detail {

inline Cycle reduce_primitive(HPoly A, HPoly B, DivisionStrategy strategy) {
  if (A.degree_x() < B.degree_x()) std::swap(A, B);
  const EuclidStep s = euclid_step(A, B, strategy);
  Cycle out = reduce(s.Bp, s.Rp, strategy);
  if (!s.Hp.is_constant()) out -= intersect_1var(s.Bp, s.Hp);
  if (!s.G.is_constant()) out += intersect_1var(A, s.G);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Driver

struct IntersectOptions {
  bool affine = false;  ///< homogenize each input to its own total degree
  DivisionStrategy strategy = DivisionStrategy::FractionField;
};

struct IntersectionResult {
  Cycle cycle;
  HPoly a;
  HPoly b;
  std::vector<std::string> warnings;

  std::int64_t bezout_number() const { return static_cast<std::int64_t>(a.degree()) * b.degree(); }
};

inline HPoly prepare_curve(const MPoly& p, bool affine) {
  if (p.is_zero()) throw UsageError("curve polynomial is zero");
  return affine ? homogenize(p) : HPoly(p);
}

/// Intersection cycle of two projective curves, with the size and
/// positivity guarantees enforced.
inline IntersectionResult intersect_curves(const MPoly& A, const MPoly& B, const IntersectOptions& opts = {}) {
  IntersectionResult res{Cycle(), prepare_curve(A, opts.affine), prepare_curve(B, opts.affine), {}};
  if (res.a.is_constant() || res.b.is_constant()) {
    res.warnings.emplace_back("constant polynomial defines the empty curve; intersection is empty");
    return res;
  }
  const HPoly g = gcd_homogeneous(res.a, res.b);
  if (!g.is_constant()) throw CommonComponentError(g);
  res.cycle = reduce(res.a, res.b, opts.strategy);
  if (!res.cycle.all_positive())
    throw InternalError("intersection cycle has a non-positive coefficient: " + res.cycle.to_string());
  if (res.cycle.size() != res.bezout_number())
    throw InternalError("intersection cycle size " + std::to_string(res.cycle.size()) + " != " +
                        std::to_string(res.bezout_number()));
  return res;
}

inline Cycle intersection_cycle(const MPoly& A, const MPoly& B, const IntersectOptions& opts = {}) {
  return intersect_curves(A, B, opts).cycle;
}

inline Cycle intersection_cycle(const HPoly& A, const HPoly& B, const IntersectOptions& opts = {}) {
  return intersect_curves(A.poly(), B.poly(), opts).cycle;
}

}  // namespace bezout

#endif  // BEZOUT_INTERSECTION_HPP
