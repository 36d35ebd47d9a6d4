#ifndef BEZOUT_DIVISION_HPP
#define BEZOUT_DIVISION_HPP

#include <utility>
#include <vector>

#include "bezout/gcd.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

/// Element of Q(y): reduced fraction with a monic denominator.
class QFrac {
 public:
  QFrac() : den_(1) {}
  QFrac(int c) : num_(BigRat(c)), den_(1) {}  // NOLINT(implicit)
  QFrac(QPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  QFrac operator-() const { return QFrac(-num_, den_, raw_tag{}); }
  friend QFrac operator+(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QFrac operator-(const QFrac& a, const QFrac& b) { return a + (-b); }
  friend QFrac operator*(const QFrac& a, const QFrac& b) { return QFrac(a.num_ * b.num_, a.den_ * b.den_); }
  friend QFrac operator/(const QFrac& a, const QFrac& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return QFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const QFrac& a, const QFrac& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::ostream& operator<<(std::ostream& os, const QFrac& f) {
    return os << "(" << f.num_ << ")/(" << f.den_ << ")";
  }

 private:
  struct raw_tag {};
  QFrac(QPoly n, QPoly d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    BigRat l = den_.lc();
    if (!l.is_one()) {
      num_ = num_.scaled(l.inverse());
      den_ = den_.scaled(l.inverse());
    }
  }

  QPoly num_, den_;
};

inline bool is_zero(const QFrac& f) { return f.is_zero(); }
inline QFrac exact_div(const QFrac& a, const QFrac& b) { return a / b; }

/// Homogeneous rational function N(y,z)/D(y,z) in lowest terms, D with
/// leading coefficient 1.
struct HomFrac {
  MPoly num;
  MPoly den;
};

/// Quotient and remainder of A by B in K(y,z)[x], indexed by power of x.
struct FFDivision {
  std::vector<HomFrac> q;
  std::vector<HomFrac> r;
  int degree_a = 0;
  int degree_b = 0;
};

namespace detail {

/// Rehomogenizes n(y)/d(y) to the homogeneous rational function of degree t.
inline HomFrac rehomogenize(const QFrac& f, int t) {
  if (f.is_zero()) return {MPoly(), MPoly(1)};
  const int delta = f.num().degree() - f.den().degree();
  const int extra_num = std::max(0, t - delta);
  const int extra_den = std::max(0, delta - t);
  return {binary_homogenize(f.num(), f.num().degree() + extra_num, Var::Y, Var::Z),
          binary_homogenize(f.den(), f.den().degree() + extra_den, Var::Y, Var::Z)};
}

inline UPoly<QFrac> to_frac_poly(const MPoly& p) {
  return to_xy(p).map([](const QPoly& c) { return QFrac(c); });
}

}  // namespace detail

/// Division A = q*B + r over the fraction field of Q[y,z], deg_x r < deg_x B.
inline FFDivision ff_divide(const HPoly& A, const HPoly& B) {
  if (B.degree_x() < 1) throw UsageError("ff_divide: divisor has x-degree 0; use the one-variable route");
  if (A.degree_x() < B.degree_x()) throw UsageError("ff_divide: dividend x-degree below divisor x-degree");
  auto [q, r] = divmod(detail::to_frac_poly(A.poly()), detail::to_frac_poly(B.poly()));
  FFDivision out;
  out.degree_a = A.degree();
  out.degree_b = B.degree();
  for (int i = 0; i <= q.degree(); ++i)
    out.q.push_back(detail::rehomogenize(q.coeff(i), A.degree() - B.degree() - i));
  for (int i = 0; i <= r.degree(); ++i) out.r.push_back(detail::rehomogenize(r.coeff(i), A.degree() - i));
  return out;
}

/// H*A = Q*B + R with H in Q[y,z]. R may be zero.
struct ClearedDivision {
  HPoly H;
  MPoly Q;
  MPoly R;
};

/// Multiplies q and r through by the lcm of their denominators.
inline ClearedDivision clear_denominators(const FFDivision& d) {
  MPoly H(1);
  for (const auto* part : {&d.q, &d.r})
    for (const auto& f : *part)
      if (!f.num.is_zero()) H = binary_lcm(H, f.den, Var::Y, Var::Z);
  auto assemble = [&](const std::vector<HomFrac>& part) {
    MPoly out;
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (part[i].num.is_zero()) continue;
      out += part[i].num * divide_exact(H, part[i].den) * MPoly::x().pow(static_cast<int>(i));
    }
    return out;
  };
  return {HPoly(H), assemble(d.q), assemble(d.r)};
}

/// Fraction-free alternative: H = lc_x(B)^(deg_x A - deg_x B + 1).
inline ClearedDivision pseudo_divide(const HPoly& A, const HPoly& B) {
  if (B.degree_x() < 1) throw UsageError("pseudo_divide: divisor has x-degree 0");
  if (A.degree_x() < B.degree_x()) throw UsageError("pseudo_divide: dividend x-degree below divisor x-degree");
  const XYPoly a = to_xy(A.poly()), b = to_xy(B.poly());
  auto [q, r] = pseudo_divmod(a, b);
  const int e = A.degree_x() - B.degree_x() + 1;
  const int lc_degree = B.degree() - B.degree_x();
  const QPoly h = pow_coeff(b.lc(), e);
  const int dh = e * lc_degree;
  MPoly H = binary_homogenize(h, dh, Var::Y, Var::Z);
  MPoly Q = from_xy(q, dh + A.degree() - B.degree());
  MPoly R = from_xy(r, dh + A.degree());
  const BigRat s = H.leading_term().second.inverse();
  return {HPoly(H.scaled(s)), Q.scaled(s), R.scaled(s)};
}

}  // namespace bezout

#endif  // BEZOUT_DIVISION_HPP
