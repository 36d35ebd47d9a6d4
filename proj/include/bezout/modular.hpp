#ifndef BEZOUT_MODULAR_HPP
#define BEZOUT_MODULAR_HPP

// Polynomial arithmetic over F_p and Z/(m) used internally by the integer
// factorizer: distinct-degree and equal-degree factorization modulo a small
// prime, then quadratic Hensel lifting to a power of that prime.

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "bezout/bigrat.hpp"
#include "bezout/errors.hpp"

namespace bezout::modp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DivisionByZero("inverse of 0 mod p");
  return powmod(a, p - 2, p);
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], s, p);
  trim(r);
  return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw DivisionByZero("F_p polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a, q(a.size() - b.size() + 1, 0);
  const std::uint64_t il = inv(b.back(), p);
  const int db = deg(b);
  for (int i = deg(a); i >= db; --i) {
    if (r[i] == 0) continue;
    std::uint64_t f = mulmod(r[i], il, p);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(f, b[j], p)) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

inline Poly make_monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

/// (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint64_t il = inv(r0.back(), p);
  return {scale(r0, il, p), scale(s0, il, p), scale(t0, il, p)};
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  trim(r);
  return r;
}

/// base^e mod f for an arbitrary-size exponent.
inline Poly powmod(const Poly& base, const BigInt& e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  Poly b = rem(base, f, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), f, p);
  }
  return result;
}

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (product of all irreducible factors of degree d, d).
inline std::vector<std::pair<Poly, int>> distinct_degree(Poly f, std::uint64_t p) {
  std::vector<std::pair<Poly, int>> out;
  const Poly x{0, 1};
  Poly h = x;
  for (int d = 1; 2 * d <= deg(f); ++d) {
    h = powmod(h, BigInt(static_cast<unsigned long>(p)), f, p);
    Poly g = gcd(f, sub(h, x, p), p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, deg(f));
  return out;
}

namespace detail {

/// k-th entry of a fixed enumeration of non-constant polynomials of degree
/// below n: the base-p digits of k + p are the coefficients.
inline Poly enumerated_poly(std::uint64_t k, int n, std::uint64_t p) {
  Poly t;
  std::uint64_t v = k + p;
  for (int i = 0; i < n && v > 0; ++i) {
    t.push_back(v % p);
    v /= p;
  }
  trim(t);
  return t;
}

inline void equal_degree_rec(const Poly& g, int d, std::uint64_t p, std::uint64_t& counter, std::vector<Poly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  while (true) {
    Poly t = enumerated_poly(counter++, deg(g), p);
    if (deg(t) < 1) continue;
    Poly w = sub(powmod(t, e, g, p), Poly{1}, p);
    Poly h = gcd(g, w, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree_rec(h, d, p, counter, out);
      equal_degree_rec(divmod(g, h, p).first, d, p, counter, out);
      return;
    }
  }
}

}  // namespace detail

/// Cantor-Zassenhaus splitting of a product of distinct degree-d
/// irreducibles (p odd). Test polynomials are enumerated, not sampled.
inline std::vector<Poly> equal_degree(const Poly& g, int d, std::uint64_t p) {
  std::vector<Poly> out;
  std::uint64_t counter = 0;
  detail::equal_degree_rec(g, d, p, counter, out);
  return out;
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p.
inline std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p) {
  std::vector<Poly> out;
  for (const auto& [g, d] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, d, p);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

inline int count_factors(const Poly& f, std::uint64_t p) {
  int n = 0;
  for (const auto& [g, d] : distinct_degree(f, p)) n += deg(g) / d;
  return n;
}

}  // namespace bezout::modp

namespace bezout::zmod {

// Polynomials over Z/(m), coefficients kept in [0, m).
using Poly = std::vector<BigInt>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline BigInt reduce(const BigInt& v, const BigInt& m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return r;
}

inline Poly reduce(const Poly& a, const BigInt& m) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce(a[i], m);
  trim(r);
  return r;
}

inline Poly add(const Poly& a, const Poly& b, const BigInt& m) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt v = 0;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v += b[i];
    r[i] = reduce(v, m);
  }
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b, const BigInt& m) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    BigInt v = 0;
    if (i < a.size()) v += a[i];
    if (i < b.size()) v -= b[i];
    r[i] = reduce(v, m);
  }
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(r, m);
}

/// Division by a monic polynomial modulo m.
inline std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b, const BigInt& m) {
  if (b.empty() || b.back() != 1) throw InternalError("divmod_monic: divisor not monic");
  if (a.size() < b.size()) return {{}, a};
  Poly r = a, q(a.size() - b.size() + 1, BigInt(0));
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    BigInt f = reduce(r[i], m);
    if (f == 0) continue;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = reduce(r[i - db + j] - f * b[j], m);
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

inline Poly from_modp(const modp::Poly& a) {
  Poly r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  trim(r);
  return r;
}

/*
 * One quadratic Hensel step: from f = g*h, s*g + t*h = 1 (mod m) with h
 * monic, produce the same relations modulo m^2.
 */
inline void hensel_step(const Poly& f, Poly& g, Poly& h, Poly& s, Poly& t, const BigInt& m) {
  const BigInt m2 = m * m;
  Poly e = sub(f, mul(g, h, m2), m2);
  auto [q, r] = divmod_monic(mul(s, e, m2), h, m2);
  Poly g2 = add(add(g, mul(t, e, m2), m2), mul(q, g, m2), m2);
  Poly h2 = add(h, r, m2);
  Poly b = sub(add(mul(s, g2, m2), mul(t, h2, m2), m2), Poly{BigInt(1)}, m2);
  auto [c, d] = divmod_monic(mul(s, b, m2), h2, m2);
  s = sub(s, d, m2);
  t = sub(sub(t, mul(t, b, m2), m2), mul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

/*
 * Lifts a factorization f = lc(f) * prod(factors) mod p (factors monic,
 * pairwise coprime) to modulus p^(2^k) >= bound. Returns the lifted monic
 * factors and the final modulus.
 */
inline std::pair<std::vector<Poly>, BigInt> hensel_lift(const Poly& f, const std::vector<modp::Poly>& factors,
                                                        std::uint64_t p, const BigInt& bound) {
  BigInt M(static_cast<unsigned long>(p));
  while (M < bound) M *= M;
  std::vector<Poly> lifted;
  Poly current = reduce(f, M);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    // current = h_i * (lc * prod_{j>i} h_j)
    modp::Poly rest_p{static_cast<std::uint64_t>(mpz_fdiv_ui(current.back().get_mpz_t(), p))};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest_p = modp::mul(rest_p, factors[j], p);
    auto [one, s_p, t_p] = modp::xgcd(rest_p, factors[i], p);
    if (one.size() != 1) throw InternalError("hensel_lift: modular factors not coprime");
    Poly g = from_modp(rest_p), h = from_modp(factors[i]), s = from_modp(s_p), t = from_modp(t_p);
    BigInt m(static_cast<unsigned long>(p));
    while (m < M) {
      hensel_step(current, g, h, s, t, m);
      m *= m;
    }
    lifted.push_back(h);
    current = g;
  }
  // The last factor is the remaining cofactor made monic.
  BigInt lc_inv;
  if (mpz_invert(lc_inv.get_mpz_t(), current.back().get_mpz_t(), M.get_mpz_t()) == 0)
    throw InternalError("hensel_lift: leading coefficient not invertible");
  Poly last(current.size());
  for (std::size_t i = 0; i < current.size(); ++i) last[i] = reduce(current[i] * lc_inv, M);
  lifted.push_back(last);
  return {lifted, M};
}

}  // namespace bezout::zmod

#endif  // BEZOUT_MODULAR_HPP
