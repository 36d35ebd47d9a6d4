#ifndef BEZOUT_NUMERIC_HPP
#define BEZOUT_NUMERIC_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "bezout/cycle.hpp"
#include "bezout/errors.hpp"
#include "bezout/factor.hpp"
#include "bezout/mpoly.hpp"

namespace bezout {

using Real = boost::multiprecision::mpfr_float;

/// Sets the default working precision (decimal digits) for new Reals.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision()) { Real::default_precision(digits); }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const BigRat& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(implicit)
  explicit Complex(const BigRat& q) : re(to_real(q)), im(0) {}

  static Complex polar(const Real& r, const Real& theta) { return {r * cos(theta), r * sin(theta)}; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    if (d == 0) throw DivisionByZero("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }

  Real norm() const { return re * re + im * im; }
  Real abs() const { return sqrt(norm()); }
  Real arg() const { return atan2(im, re); }
  Complex conj() const { return {re, -im}; }
  bool is_real() const { return im == 0; }

  std::pair<double, double> to_double() const { return {re.convert_to<double>(), im.convert_to<double>()}; }
};

inline Real abs(const Complex& c) { return c.abs(); }

/// Horner evaluation of p (low-to-high) and its derivative.
inline std::pair<Complex, Complex> eval_with_derivative(const std::vector<Complex>& p, const Complex& z) {
  Complex v = p.back(), d = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    d = d * z + v;
    v = v * z + p[i];
  }
  return {v, d};
}

inline Complex eval(const std::vector<Complex>& p, const Complex& z) { return eval_with_derivative(p, z).first; }

struct RootOptions {
  unsigned precision = 30;  ///< decimal digits
  int max_iterations = 200;
};

namespace detail {

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real ten_to_minus(unsigned digits) { return pow(Real(10), -static_cast<int>(digits)); }

/// Aberth-Ehrlich on a squarefree polynomial; returns nullopt if the
/// iteration cap is hit before all corrections fall below the tolerance.
inline std::optional<std::vector<Complex>> aberth(const std::vector<Complex>& p, unsigned digits, int max_iterations) {
  const int n = static_cast<int>(p.size()) - 1;
  if (n < 1) return std::vector<Complex>{};
  if (n == 1) return std::vector<Complex>{-p[0] / p[1]};
  const Real eps = ten_to_minus(digits);

  // Start on a circle of radius (|p0|/|pn|)^(1/n), bounded by the Cauchy
  // radius, with an angular offset to break symmetry.
  Real cauchy = 0;
  const Real lead = p[n].abs();
  for (int i = 0; i < n; ++i) cauchy = max(cauchy, p[i].abs() / lead);
  cauchy += 1;
  Real radius = p[0].abs() == 0 ? Real(1) : pow(p[0].abs() / lead, Real(1) / n);
  radius = min(max(radius, Real(1) / 8), cauchy);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = Complex::polar(radius, 2 * pi() * k / n + Real(0.4));

  for (int iter = 0; iter < max_iterations; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      const auto [v, d] = eval_with_derivative(p, z[k]);
      if (v.norm() == 0) continue;
      const Complex w = v / d;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      const Complex step = w / (Complex(1) - w * s);
      z[k] -= step;
      if (step.abs() > eps * max(Real(1), z[k].abs())) converged = false;
    }
    if (converged) return z;
  }
  return std::nullopt;
}

inline bool all_real(const std::vector<Complex>& p) {
  return std::all_of(p.begin(), p.end(), [](const Complex& c) { return c.is_real(); });
}

/// For real polynomials, roots whose imaginary part is below the tolerance
/// are made exactly real.
inline void snap_real(std::vector<Complex>& roots, const std::vector<Complex>& p, unsigned digits) {
  if (!all_real(p)) return;
  const Real tol = ten_to_minus(digits);
  for (auto& r : roots)
    if (abs(r.im) <= tol * max(Real(1), abs(r.re))) r.im = 0;
}

/// Angle in (-pi, pi] with exactly real roots on the axis.
inline bool angle_less(const Complex& a, const Complex& b) {
  const Real aa = a.arg(), ab = b.arg();
  if (aa != ab) return aa < ab;
  return a.abs() < b.abs();
}

inline std::vector<Complex> roots_squarefree(const std::vector<Complex>& p, const RootOptions& opts) {
  const unsigned digits = opts.precision;
  for (unsigned work : {digits + 10, 2 * digits + 10}) {
    PrecisionScope scope(work);
    std::vector<Complex> q;
    q.reserve(p.size());
    for (const auto& c : p) q.emplace_back(Real(c.re), Real(c.im));
    if (auto r = aberth(q, digits + 5, opts.max_iterations)) {
      snap_real(*r, q, digits + 5);
      std::sort(r->begin(), r->end(), angle_less);
      return *r;
    }
  }
  throw ConvergenceError("root finder did not converge in " + std::to_string(opts.max_iterations) +
                         " iterations; try a higher precision");
}

}  // namespace detail

inline std::vector<Complex> to_complex(const QPoly& f) {
  std::vector<Complex> p;
  p.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) p.emplace_back(c);
  return p;
}

/// Roots of a polynomial with complex coefficients, assumed squarefree.
inline std::vector<Complex> complex_roots(const std::vector<Complex>& p, const RootOptions& opts = {}) {
  std::vector<Complex> q = p;
  while (!q.empty() && q.back().norm() == 0) q.pop_back();
  if (q.size() < 2) throw UsageError("complex_roots needs a nonconstant polynomial");
  return detail::roots_squarefree(q, opts);
}

/// All deg f roots of f over Q, repeated by multiplicity; the iteration runs
/// on the squarefree parts.
inline std::vector<Complex> complex_roots(const QPoly& f, const RootOptions& opts = {}) {
  if (f.degree() < 1) throw UsageError("complex_roots needs a nonconstant polynomial");
  std::vector<Complex> out;
  for (const auto& [part, m] : squarefree(f)) {
    const auto roots = detail::roots_squarefree(to_complex(part), opts);
    for (int i = 0; i < m; ++i) out.insert(out.end(), roots.begin(), roots.end());
  }
  std::stable_sort(out.begin(), out.end(), detail::angle_less);
  return out;
}

// ---------------------------------------------------------------------------
// Unpacking

/// Point with the last nonzero coordinate exactly 1.
struct ApproxPoint {
  Complex x, y, z;
  std::int64_t multiplicity = 1;
  std::optional<double> residual_a, residual_b;
  std::size_t cycle_index = 0;  ///< position of the source cycle

  bool is_real() const { return x.is_real() && y.is_real() && z.is_real(); }
};

/// |F(P)| with the coefficients of F scaled to unit maximum magnitude.
inline Real residual(const HPoly& F, const ApproxPoint& p) {
  const MPoly G = F.poly().scaled(F.poly().max_abs_coeff().inverse());
  const Complex v = G.eval_as<Complex>(p.x, p.y, p.z, [](const BigRat& q) { return Complex(q); });
  return v.abs();
}

struct UnpackOptions {
  unsigned precision = 30;
  int max_iterations = 200;
};

/// Explicit points of each Galois cycle, in cycle order and then by root
/// angle and magnitude.
inline std::vector<ApproxPoint> unpack(const Cycle& c, const UnpackOptions& opts = {},
                                       const std::optional<std::pair<HPoly, HPoly>>& curves = std::nullopt) {
  if (!c.all_positive()) throw UsageError("unpack needs a cycle with positive coefficients");
  const RootOptions ropts{opts.precision, opts.max_iterations};
  PrecisionScope scope(2 * opts.precision + 10);
  std::vector<ApproxPoint> out;
  std::size_t index = 0;
  for (const auto& [gc, k] : c.entries()) {
    switch (gc.kind()) {
      case GaloisCycle::Kind::PInf:
        out.push_back({Complex(1), Complex(0), Complex(0), k, {}, {}, index});
        break;
      case GaloisCycle::Kind::C0:
        for (auto& a : complex_roots(gc.f(), ropts)) out.push_back({a, Complex(1), Complex(0), k, {}, {}, index});
        break;
      case GaloisCycle::Kind::C1:
        for (const auto& b : complex_roots(gc.g(), ropts)) {
          std::vector<Complex> hb;
          for (const auto& coeff : gc.h().coeffs()) {
            Complex v = 0;
            for (int j = coeff.degree(); j >= 0; --j) v = v * b + Complex(coeff.coeffs()[j]);
            hb.push_back(v);
          }
          for (auto& x : complex_roots(hb, ropts)) out.push_back({x, b, Complex(1), k, {}, {}, index});
        }
        break;
    }
    ++index;
  }
  if (curves) {
    for (auto& p : out) {
      p.residual_a = residual(curves->first, p).convert_to<double>();
      p.residual_b = residual(curves->second, p).convert_to<double>();
    }
  }
  return out;
}

inline std::int64_t total_multiplicity(const std::vector<ApproxPoint>& pts) {
  std::int64_t n = 0;
  for (const auto& p : pts) n += p.multiplicity;
  return n;
}

}  // namespace bezout

#endif  // BEZOUT_NUMERIC_HPP
