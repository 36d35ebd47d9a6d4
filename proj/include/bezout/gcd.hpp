#ifndef BEZOUT_GCD_HPP
#define BEZOUT_GCD_HPP

#include <algorithm>
#include <utility>

#include "bezout/mpoly.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

/// Monic gcd of the Q[y] coefficients of p (zero for the zero polynomial).
inline QPoly content(const XYPoly& p) {
  QPoly c;
  for (const auto& a : p.coeffs()) {
    c = gcd(c, a);
    if (c.degree() == 0) break;
  }
  return c;
}

inline XYPoly primitive_part(const XYPoly& p) {
  if (p.is_zero()) return p;
  const QPoly c = content(p);
  return p.map([&](const QPoly& a) { return exact_div(a, c); });
}

/// gcd in Q[y][x] by the primitive polynomial remainder sequence. The result
/// is primitive times the monic gcd of the contents.
inline XYPoly bivariate_gcd(const XYPoly& a, const XYPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const QPoly c = gcd(content(a), content(b));
  XYPoly pa = primitive_part(a), pb = primitive_part(b);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree() == 0) return XYPoly(c);
    XYPoly r = pseudo_divmod(pa, pb).second;
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  return pa.map([&](const QPoly& x) { return x * c; });
}

/// gcd of two homogeneous polynomials, normalized so its leading graded-lex
/// coefficient is 1. Works through the z = 1 dehomogenization after the
/// explicit powers of z are split off.
inline HPoly gcd_homogeneous(const HPoly& A, const HPoly& B) {
  const int za = A.poly().valuation_in(Var::Z);
  const int zb = B.poly().valuation_in(Var::Z);
  const XYPoly a = to_xy(A.poly().divided_by_power(Var::Z, za));
  const XYPoly b = to_xy(B.poly().divided_by_power(Var::Z, zb));
  const XYPoly g = bivariate_gcd(a, b);
  MPoly G = from_xy(g, total_degree(g)) * MPoly::z().pow(std::min(za, zb));
  return HPoly(G).normalized();
}

/// gcd of two binary forms in the variables (u, v), leading coefficient 1.
inline MPoly binary_gcd(const MPoly& F, const MPoly& G, Var u, Var v) {
  if (F.is_zero()) return G.normalized();
  if (G.is_zero()) return F.normalized();
  const QPoly f = binary_dehomogenize(F, u, v), g = binary_dehomogenize(G, u, v);
  const int vpow = std::min(F.total_degree() - f.degree(), G.total_degree() - g.degree());
  const QPoly h = gcd(f, g);
  return binary_homogenize(h, h.degree() + vpow, u, v).normalized();
}

inline MPoly binary_lcm(const MPoly& F, const MPoly& G, Var u, Var v) {
  const MPoly g = binary_gcd(F, G, u, v);
  return divide_exact(F * G, g).normalized();
}

/// Split of A into its content in Q[y,z] (viewing A as a polynomial in x)
/// and the primitive cofactor. The content is normalized to leading
/// coefficient 1 and A == content * primitive exactly.
struct XContent {
  HPoly content;
  HPoly primitive;
};

inline XContent x_content(const HPoly& A) {
  const XYPoly a = to_xy(A.poly());
  int zpow = A.degree();
  QPoly c;
  for (int i = 0; i <= a.degree(); ++i) {
    const QPoly& ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    zpow = std::min(zpow, A.degree() - i - ai.degree());
    c = gcd(c, ai);
  }
  HPoly content(binary_homogenize(c, c.degree() + zpow, Var::Y, Var::Z));
  HPoly primitive = divide_exact(A, content);
  return {std::move(content), std::move(primitive)};
}

}  // namespace bezout

#endif  // BEZOUT_GCD_HPP
