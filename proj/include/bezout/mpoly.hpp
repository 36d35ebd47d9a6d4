#ifndef BEZOUT_MPOLY_HPP
#define BEZOUT_MPOLY_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "bezout/bigrat.hpp"
#include "bezout/errors.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

enum class Var { X = 0, Y = 1, Z = 2 };

inline const char* var_name(Var v) {
  static constexpr std::array<const char*, 3> names{"x", "y", "z"};
  return names[static_cast<int>(v)];
}

struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  Monomial() = default;
  Monomial(int x, int y, int z) : e{x, y, z} {}

  int x() const { return e[0]; }
  int y() const { return e[1]; }
  int z() const { return e[2]; }
  int operator[](Var v) const { return e[static_cast<int>(v)]; }
  int degree() const { return e[0] + e[1] + e[2]; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]};
  }
  bool divides(const Monomial& o) const { return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2]; }
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2]};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic with x > y > z, largest first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.x() != b.x()) return a.x() > b.x();
    if (a.y() != b.y()) return a.y() > b.y();
    return a.z() > b.z();
  }
};

/// Sparse polynomial in x, y, z over Q. No zero coefficients are stored.
class MPoly {
 public:
  using TermMap = std::map<Monomial, BigRat, GrlexDescending>;

  MPoly() = default;
  MPoly(int c) : MPoly(BigRat(c)) {}  // NOLINT(implicit)
  MPoly(const BigRat& c) {            // NOLINT(implicit)
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
  }
  MPoly(const Monomial& m, const BigRat& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
  }

  static MPoly var(Var v) {
    Monomial m;
    m.e[static_cast<int>(v)] = 1;
    return MPoly(m, BigRat(1));
  }
  static MPoly x() { return var(Var::X); }
  static MPoly y() { return var(Var::Y); }
  static MPoly z() { return var(Var::Z); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigRat coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat() : it->second;
  }

  void add_term(const Monomial& m, const BigRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Leading term in graded-lex order; undefined for zero.
  const std::pair<const Monomial, BigRat>& leading_term() const { return *terms_.begin(); }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
  }
  /// Largest k with v^k dividing every term (0 for the zero polynomial).
  int valuation_in(Var v) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[v];
    for (const auto& [m, c] : terms_) d = std::min(d, m[v]);
    return d;
  }
  bool involves(Var v) const { return degree_in(v) > 0; }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
  }
  bool is_constant() const { return total_degree() <= 0; }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const BigRat& s) const {
    if (s.is_zero()) return {};
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }

  MPoly pow(int e) const {
    MPoly r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Divides every term by v^k; requires k <= valuation_in(v).
  MPoly divided_by_power(Var v, int k) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      mm.e[static_cast<int>(v)] -= k;
      if (mm.e[static_cast<int>(v)] < 0) throw InternalError("divided_by_power: not divisible");
      r.terms_.emplace(mm, c);
    }
    return r;
  }

  /// Substitutes a rational value for one variable.
  MPoly substituted(Var v, const BigRat& value) const {
    MPoly r;
    const int vi = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      mm.e[vi] = 0;
      BigRat f = c;
      for (int i = 0; i < m.e[vi]; ++i) f *= value;
      r.add_term(mm, f);
    }
    return r;
  }

  /// General linear change of coordinates: each variable is replaced by the
  /// given linear form.
  MPoly substituted_linear(const std::array<MPoly, 3>& images) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
      MPoly t(c);
      for (int i = 0; i < 3; ++i)
        if (m.e[i] > 0) t *= images[i].pow(m.e[i]);
      r += t;
    }
    return r;
  }

  BigRat eval(const BigRat& x, const BigRat& y, const BigRat& z) const { return eval_as<BigRat>(x, y, z); }

  /// Evaluation into any commutative ring U that accepts a BigRat lift.
  template <class U, class Lift>
  U eval_as(const U& x, const U& y, const U& z, Lift lift) const {
    U acc{};
    for (const auto& [m, c] : terms_) {
      U t = lift(c);
      for (int i = 0; i < m.x(); ++i) t = t * x;
      for (int i = 0; i < m.y(); ++i) t = t * y;
      for (int i = 0; i < m.z(); ++i) t = t * z;
      acc = acc + t;
    }
    return acc;
  }
  template <class U>
  U eval_as(const U& x, const U& y, const U& z) const {
    return eval_as(x, y, z, [](const BigRat& c) { return U(c); });
  }

  /// Largest absolute coefficient (0 for the zero polynomial).
  BigRat max_abs_coeff() const {
    BigRat r;
    for (const auto& [m, c] : terms_) r = std::max(r, abs(c));
    return r;
  }

  /// Scales so that the leading graded-lex coefficient is 1.
  MPoly normalized() const {
    if (is_zero()) return *this;
    return scaled(leading_term().second.inverse());
  }

  /// Compact canonical rendering in graded-lex order, e.g. "-x^3+y^2*z".
  std::string to_string() const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

 private:
  TermMap terms_;
};

/// Renders terms in the given order: "-3/4*x^2*y+z-1". Zero coefficients
/// must already be absent.
template <class Range>
std::string format_terms(const Range& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    BigRat a = c;
    if (a.sign() < 0) {
      os << "-";
      a = -a;
    } else if (!first) {
      os << "+";
    }
    first = false;
    bool wrote = false;
    if (!a.is_one() || m.degree() == 0) {
      os << a.to_string();
      wrote = true;
    }
    for (int i = 0; i < 3; ++i) {
      if (m.e[i] == 0) continue;
      if (wrote) os << "*";
      os << var_name(static_cast<Var>(i));
      if (m.e[i] > 1) os << "^" << m.e[i];
      wrote = true;
    }
  }
  return first ? "0" : os.str();
}

inline std::string MPoly::to_string() const { return format_terms(terms_); }

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Exact multivariate division; throws InternalError when b does not divide a.
inline MPoly divide_exact(MPoly a, const MPoly& b) {
  if (b.is_zero()) throw DivisionByZero("multivariate division by zero");
  const auto& [lm, lc] = b.leading_term();
  MPoly q;
  while (!a.is_zero()) {
    const auto& [am, ac] = a.leading_term();
    if (!lm.divides(am)) throw InternalError("divide_exact: " + b.to_string() + " does not divide dividend");
    MPoly t(am / lm, ac / lc);
    q += t;
    a -= t * b;
  }
  return q;
}

/// Optional-style exact division test.
inline bool divides(const MPoly& b, const MPoly& a) {
  try {
    divide_exact(a, b);
    return true;
  } catch (const InternalError&) {
    return false;
  }
}

/// Homogeneous, nonzero polynomial of known total degree.
class HPoly {
 public:
  explicit HPoly(MPoly p) : p_(std::move(p)) {
    if (p_.is_zero()) throw UsageError("homogeneous polynomial must be nonzero");
    if (!p_.is_homogeneous()) throw UsageError("polynomial is not homogeneous: " + p_.to_string());
    degree_ = p_.total_degree();
  }

  const MPoly& poly() const { return p_; }
  int degree() const { return degree_; }
  int degree_x() const { return p_.degree_in(Var::X); }
  bool is_constant() const { return degree_ == 0; }

  friend HPoly operator*(const HPoly& a, const HPoly& b) { return HPoly(a.p_ * b.p_); }
  HPoly scaled(const BigRat& s) const { return HPoly(p_.scaled(s)); }
  HPoly normalized() const { return HPoly(p_.normalized()); }
  HPoly pow(int e) const { return HPoly(p_.pow(e)); }

  std::string to_string() const { return p_.to_string(); }
  friend bool operator==(const HPoly& a, const HPoly& b) { return a.p_ == b.p_; }
  friend std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.to_string(); }

 private:
  MPoly p_;
  int degree_ = 0;
};

inline HPoly divide_exact(const HPoly& a, const HPoly& b) { return HPoly(divide_exact(a.poly(), b.poly())); }

/// Lifts an affine polynomial in x, y to the homogeneous form of the same
/// total degree; z = 1 recovers the input.
inline HPoly homogenize(const MPoly& p) {
  if (p.is_zero()) throw UsageError("cannot homogenize the zero polynomial");
  if (p.involves(Var::Z)) throw UsageError("homogenize expects a polynomial in x and y only");
  const int d = p.total_degree();
  MPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term(Monomial(m.x(), m.y(), d - m.degree()), c);
  return HPoly(std::move(r));
}

// ---------------------------------------------------------------------------
// Dense views used by the algorithms.

/// Polynomial in x with coefficients in Q[y]: the z = 1 dehomogenization.
using XYPoly = UPoly<QPoly>;

inline XYPoly to_xy(const MPoly& p) {
  std::vector<QPoly> cs(std::max(0, p.degree_in(Var::X) + 1));
  for (const auto& [m, c] : p.terms()) cs[m.x()] += QPoly::monomial(c, m.y());
  return XYPoly(std::move(cs));
}

/// Rehomogenizes a z = 1 dehomogenization to the given total degree.
inline MPoly from_xy(const XYPoly& p, int degree) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    const QPoly& c = p.coeffs()[i];
    for (int j = 0; j <= c.degree(); ++j) {
      if (c.coeffs()[j].is_zero()) continue;
      if (i + j > degree) throw InternalError("from_xy: term exceeds target degree");
      r.add_term(Monomial(i, j, degree - i - j), c.coeffs()[j]);
    }
  }
  return r;
}

inline int total_degree(const XYPoly& p) {
  int d = -1;
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeffs()[i].is_zero()) d = std::max(d, i + p.coeffs()[i].degree());
  return d;
}

/// A binary form F(u, v) (only the two given variables occur) as F(u, 1).
inline QPoly binary_dehomogenize(const MPoly& f, Var u, Var v) {
  QPoly r;
  for (const auto& [m, c] : f.terms()) {
    const Var w = static_cast<Var>(3 - static_cast<int>(u) - static_cast<int>(v));
    if (m[w] != 0) throw UsageError("binary form involves a third variable: " + f.to_string());
    r += QPoly::monomial(c, m[u]);
  }
  return r;
}

inline MPoly binary_homogenize(const QPoly& p, int degree, Var u, Var v) {
  if (p.degree() > degree) throw InternalError("binary_homogenize: degree too small");
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m;
    m.e[static_cast<int>(u)] = i;
    m.e[static_cast<int>(v)] = degree - i;
    r.add_term(m, p.coeffs()[i]);
  }
  return r;
}

/// Univariate polynomial in one variable as an MPoly (for printing).
inline MPoly upoly_to_mpoly(const QPoly& p, Var v) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Monomial m;
    m.e[static_cast<int>(v)] = i;
    r.add_term(m, p.coeffs()[i]);
  }
  return r;
}

}  // namespace bezout

#endif  // BEZOUT_MPOLY_HPP
