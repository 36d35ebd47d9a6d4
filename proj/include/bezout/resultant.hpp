#ifndef BEZOUT_RESULTANT_HPP
#define BEZOUT_RESULTANT_HPP

#include "bezout/mpoly.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

namespace detail {

// Res_x of forms with (total, x-) degrees (m, a) and (n, b) is a binary form
// of degree m*b + n*a - a*b.
inline int resultant_degree(const HPoly& A, const HPoly& B) {
  const int m = A.degree(), a = A.degree_x(), n = B.degree(), b = B.degree_x();
  return m * b + n * a - a * b;
}

inline void require_x(const HPoly& A, const HPoly& B) {
  if (A.degree_x() < 1 || B.degree_x() < 1) throw UsageError("resultant_x needs positive x-degree in both inputs");
}

}  // namespace detail

/// Sylvester resultant in x, as a binary form in y, z (zero iff A and B
/// share a factor of positive x-degree). Subresultant PRS on the z = 1
/// dehomogenization; x-degrees survive that substitution.
inline MPoly resultant_x(const HPoly& A, const HPoly& B) {
  detail::require_x(A, B);
  const QPoly r = resultant(to_xy(A.poly()), to_xy(B.poly()));
  if (r.is_zero()) return {};
  return binary_homogenize(r, detail::resultant_degree(A, B), Var::Y, Var::Z);
}

/// Same value by Bareiss elimination on the Sylvester matrix.
inline MPoly resultant_x_sylvester(const HPoly& A, const HPoly& B) {
  detail::require_x(A, B);
  const QPoly r = sylvester_resultant(to_xy(A.poly()), to_xy(B.poly()));
  if (r.is_zero()) return {};
  return binary_homogenize(r, detail::resultant_degree(A, B), Var::Y, Var::Z);
}

}  // namespace bezout

#endif  // BEZOUT_RESULTANT_HPP
