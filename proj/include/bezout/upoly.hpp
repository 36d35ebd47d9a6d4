#ifndef BEZOUT_UPOLY_HPP
#define BEZOUT_UPOLY_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bezout/bigrat.hpp"
#include "bezout/errors.hpp"

namespace bezout {

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

/*
 * Dense univariate polynomial over a coefficient type T.
 *
 * T must be default-constructible to zero, constructible from int, support
 * + - * and provide free functions is_zero(T) and exact_div(T, T). Field
 * operations (divmod, gcd, monic) additionally use T's operator/.
 *
 * Coefficients are stored low-to-high with no trailing zeros, so the zero
 * polynomial is the empty vector and degree() == -1.
 */
template <class T>
class UPoly {
 public:
  using coeff_type = T;

  UPoly() = default;
  UPoly(int c) : UPoly(T(c)) {}  // NOLINT(implicit)
  UPoly(const T& c) {            // NOLINT(implicit)
    if (!detail::coeff_is_zero(c)) c_.push_back(c);
  }
  UPoly(std::initializer_list<T> low_to_high) : c_(low_to_high) { trim(); }
  explicit UPoly(std::vector<T> low_to_high) : c_(std::move(low_to_high)) { trim(); }

  /// c * x^n
  static UPoly monomial(const T& c, int n) {
    if (detail::coeff_is_zero(c)) return {};
    std::vector<T> v(n + 1);
    v[n] = c;
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const T& lc() const {
    assert(!c_.empty());
    return c_.back();
  }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(); }
  const std::vector<T>& coeffs() const { return c_; }

  void set_coeff(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) {
      if (detail::coeff_is_zero(v)) return;
      c_.resize(i + 1);
    }
    c_[i] = v;
    trim();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  UPoly scaled(const T& s) const {
    if (detail::coeff_is_zero(s)) return {};
    UPoly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  UPoly shifted_up(int n) const {
    if (is_zero()) return {};
    std::vector<T> v(n, T());
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }

  T eval(const T& at) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Evaluation into a different ring U (e.g. a number-field element).
  template <class U, class Lift>
  U eval_as(const U& at, Lift lift) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + lift(*it);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<int>(i));
    return UPoly(std::move(v));
  }

  /// p(a*x + b)
  UPoly compose_linear(const T& a, const T& b) const {
    UPoly lin{b, a};
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
    return acc;
  }

  template <class F>
  auto map(F f) const -> UPoly<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    std::vector<U> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return UPoly<U>(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Renders with a caller-supplied coefficient printer; used for debugging
  /// and error messages only (canonical printing goes through MPoly).
  std::string debug_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (detail::coeff_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i > 0) os << "*" << var;
      if (i > 1) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.debug_string("t"); }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
  return p.is_zero();
}

using QPoly = UPoly<BigRat>;

/// Lexicographic comparison from the top coefficient down, for coefficient
/// types with a total order. Degree first.
template <class T>
std::strong_ordering compare_poly(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (auto c = compare_coeff(a.coeff(i), b.coeff(i)); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

inline std::strong_ordering compare_coeff(const BigRat& a, const BigRat& b) { return a <=> b; }
template <class T>
std::strong_ordering compare_coeff(const UPoly<T>& a, const UPoly<T>& b) {
  return compare_poly(a, b);
}

// ---------------------------------------------------------------------------
// Field coefficient operations

/// Euclidean division a = q*b + r, deg r < deg b.
template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<T>(), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(a.degree() - b.degree() + 1);
  const T inv_lc = T(1) / b.lc();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = r[i] * inv_lc;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeff(j);
  }
  r.resize(db);
  return {UPoly<T>(std::move(q)), UPoly<T>(std::move(r))};
}

template <class T>
UPoly<T> monic(const UPoly<T>& p) {
  if (p.is_zero()) return p;
  return p.scaled(T(1) / p.lc());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g monic.
template <class T>
std::tuple<UPoly<T>, UPoly<T>, UPoly<T>> xgcd(const UPoly<T>& a, const UPoly<T>& b) {
  UPoly<T> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = T(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// ---------------------------------------------------------------------------
// Ring coefficient operations

/// Exact division; throws InternalError if b does not divide a.
template <class T>
UPoly<T> exact_div(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial exact division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("exact_div: inexact polynomial division");
  std::vector<T> r = a.coeffs();
  std::vector<T> q(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(r[i])) continue;
    T f = exact_div(r[i], b.lc());
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeff(j);
  }
  for (int i = 0; i < db; ++i)
    if (!is_zero(r[i])) throw InternalError("exact_div: inexact polynomial division");
  return UPoly<T>(std::move(q));
}

/// lc(b)^(deg a - deg b + 1) * a = q*b + r over an integral domain.
template <class T>
std::pair<UPoly<T>, UPoly<T>> pseudo_divmod(const UPoly<T>& a, const UPoly<T>& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-division by zero");
  if (a.degree() < b.degree()) return {UPoly<T>(), a};
  const int e = a.degree() - b.degree() + 1;
  UPoly<T> q, r = a;
  const T& l = b.lc();
  for (int k = 0; k < e; ++k) {
    q = q.scaled(l);
    if (r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      T f = r.lc();
      r = r.scaled(l) - b.scaled(f).shifted_up(shift);
      q = q + UPoly<T>::monomial(f, shift);
    } else {
      r = r.scaled(l);
    }
  }
  return {q, r};
}

template <class T>
T pow_coeff(const T& base, int e) {
  T r(1), b = base;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

/// Resultant by the subresultant PRS over an integral domain T with exact
/// division, using the Sylvester-matrix sign convention.
template <class T>
T resultant(UPoly<T> A, UPoly<T> B) {
  if (A.is_zero() || B.is_zero()) return T();
  T s(1);
  if (A.degree() < B.degree()) {
    if ((A.degree() * B.degree()) % 2 == 1) s = -s;
    std::swap(A, B);
  }
  if (B.degree() == 0) return s * pow_coeff(B.lc(), A.degree());
  T g(1), h(1);
  while (true) {
    const int delta = A.degree() - B.degree();
    if (A.degree() % 2 == 1 && B.degree() % 2 == 1) s = -s;
    UPoly<T> R = pseudo_divmod(A, B).second;
    A = std::move(B);
    if (R.is_zero()) return T();
    const T denom = g * pow_coeff(h, delta);
    B = R.map([&](const T& c) { return exact_div(c, denom); });
    g = A.lc();
    if (delta > 0) h = exact_div(pow_coeff(g, delta), pow_coeff(h, delta - 1));
    if (B.degree() == 0) {
      const int da = A.degree();
      const T last = exact_div(pow_coeff(B.lc(), da), pow_coeff(h, da - 1));
      return s * last;
    }
  }
}

/// Sylvester determinant by fraction-free (Bareiss) elimination; an
/// independent cross-check for resultant() on small inputs.
template <class T>
T sylvester_resultant(const UPoly<T>& a, const UPoly<T>& b) {
  if (a.is_zero() || b.is_zero()) return T();
  const int m = a.degree(), n = b.degree();
  const int N = m + n;
  if (N == 0) return T(1);
  std::vector<std::vector<T>> M(N, std::vector<T>(N));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.coeff(n - j);
  T sign(1), prev(1);
  for (int k = 0; k < N - 1; ++k) {
    if (is_zero(M[k][k])) {
      int piv = -1;
      for (int i = k + 1; i < N; ++i)
        if (!is_zero(M[i][k])) { piv = i; break; }
      if (piv < 0) return T();
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j)
        M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
      M[i][k] = T();
    }
    prev = M[k][k];
  }
  return sign * M[N - 1][N - 1];
}

}  // namespace bezout

#endif  // BEZOUT_UPOLY_HPP
