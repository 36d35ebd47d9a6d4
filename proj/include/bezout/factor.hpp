#ifndef BEZOUT_FACTOR_HPP
#define BEZOUT_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "bezout/bigrat.hpp"
#include "bezout/modular.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

/// unit * prod(factor^multiplicity); factors monic, irreducible, distinct.
template <class T>
struct Factorization {
  T unit;
  std::vector<std::pair<UPoly<T>, int>> factors;

  UPoly<T> expand() const {
    UPoly<T> r(unit);
    for (const auto& [f, m] : factors)
      for (int i = 0; i < m; ++i) r = r * f;
    return r;
  }
  int degree() const {
    int d = 0;
    for (const auto& [f, m] : factors) d += f.degree() * m;
    return d;
  }
  bool is_irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

inline std::strong_ordering compare_coeff(const NFElem& a, const NFElem& b) { return compare_poly(a.value(), b.value()); }

namespace detail {

template <class T>
void sort_factors(std::vector<std::pair<UPoly<T>, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
    if (auto c = compare_poly(a.first, b.first); c != 0) return c < 0;
    return a.second < b.second;
  });
}

}  // namespace detail

/// Yun's squarefree decomposition over a field of characteristic 0. The
/// parts are monic, squarefree, pairwise coprime; their product with
/// multiplicities is f / lc(f).
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree(const UPoly<T>& f) {
  if (f.is_zero()) throw UsageError("squarefree decomposition of zero");
  std::vector<std::pair<UPoly<T>, int>> out;
  const UPoly<T> a = monic(f);
  if (a.degree() < 1) return out;
  const UPoly<T> b = a.derivative();
  const UPoly<T> c = gcd(a, b);
  UPoly<T> w = exact_div(a, c);
  UPoly<T> y = exact_div(b, c);
  UPoly<T> z = y - w.derivative();
  for (int i = 1; w.degree() > 0; ++i) {
    UPoly<T> g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials

namespace detail {

using ZPoly = std::vector<BigInt>;

/// Primitive integer polynomial with positive leading coefficient that is a
/// rational multiple of p.
inline ZPoly to_primitive_z(const QPoly& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.denominator());
  ZPoly z;
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.numerator() * (den / c.denominator());
    z.push_back(v);
    g = gcd(g, v);
  }
  if (p.lc().sign() < 0) g = -g;
  for (auto& v : z) v /= g;
  return z;
}

inline QPoly from_z(const ZPoly& z) {
  std::vector<BigRat> v;
  for (const auto& c : z) v.emplace_back(c);
  return QPoly(std::move(v));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline modp::Poly reduce_mod(const ZPoly& z, std::uint64_t p) {
  modp::Poly r;
  for (const auto& c : z) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  modp::trim(r);
  return r;
}

/// 2 * |lc| * 2^n * ||f||_2 + 1, a bound on the coefficients of lc(f) times
/// any monic factor of f.
inline BigInt coefficient_bound(const ZPoly& f) {
  BigInt sq = 0;
  for (const auto& c : f) sq += c * c;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  BigInt b = norm * abs(f.back()) * 2;
  b <<= static_cast<unsigned long>(f.size() - 1);
  return b + 1;
}

inline BigInt symmetric(const BigInt& v, const BigInt& m) {
  BigInt r = zmod::reduce(v, m);
  if (r * 2 > m) r -= m;
  return r;
}

/// Chooses the prime among the first few admissible ones that yields the
/// fewest modular factors.
inline std::uint64_t choose_prime(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::uint64_t best = 0;
  int best_count = 0;
  int admissible = 0;
  for (std::uint64_t p = 2 * n + 1; admissible < 3; ++p) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    modp::Poly fp = modp::make_monic(reduce_mod(f, p), p);
    if (modp::deg(modp::gcd(fp, modp::derivative(fp, p), p)) > 0) continue;
    ++admissible;
    int c = modp::count_factors(fp, p);
    if (best == 0 || c < best_count) {
      best = p;
      best_count = c;
    }
    if (c == 1) break;
  }
  return best;
}

/// Irreducible factors over Z of a primitive squarefree f (positive lc),
/// by modular factorization, Hensel lifting and Zassenhaus recombination.
inline std::vector<ZPoly> factor_squarefree_z(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const std::uint64_t p = choose_prime(f);
  modp::Poly fp = modp::make_monic(reduce_mod(f, p), p);
  std::vector<modp::Poly> mod_factors = modp::factor_squarefree(fp, p);
  if (mod_factors.size() == 1) return {f};

  const BigInt bound = coefficient_bound(f);
  auto [lifted, M] = zmod::hensel_lift(f, mod_factors, p, bound);

  std::vector<ZPoly> found;
  QPoly remaining = from_z(f);
  ZPoly remaining_z = f;
  std::vector<zmod::Poly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool split = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      const BigInt lc = remaining_z.back();
      // Constant-term pretest before the full candidate product.
      BigInt c0 = lc;
      for (auto i : idx) c0 = zmod::reduce(c0 * (pool[i].empty() ? BigInt(0) : pool[i][0]), M);
      c0 = symmetric(c0, M);
      const BigInt& f0 = remaining_z[0];
      bool plausible = (c0 == 0) ? (f0 == 0) : (f0 * lc) % c0 == 0;
      if (plausible) {
        zmod::Poly cand{zmod::reduce(lc, M)};
        for (auto i : idx) cand = zmod::mul(cand, pool[i], M);
        QPoly cq;
        {
          std::vector<BigRat> v;
          for (const auto& c : cand) v.emplace_back(symmetric(c, M));
          cq = QPoly(std::move(v));
        }
        ZPoly cz = to_primitive_z(cq);
        QPoly cprim = from_z(cz);
        auto [quo, r] = divmod(remaining, cprim);
        if (r.is_zero() && cprim.degree() > 0) {
          found.push_back(cz);
          remaining = quo;
          remaining_z = to_primitive_z(remaining);
          remaining = from_z(remaining_z);
          std::vector<zmod::Poly> rest;
          for (std::size_t i = 0; i < pool.size(); ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
          pool = std::move(rest);
          split = true;
          break;
        }
      }
      // Next combination in lexicographic order.
      int k = static_cast<int>(size) - 1;
      while (k >= 0 && idx[k] == pool.size() - size + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!split) ++size;
  }
  found.push_back(remaining_z);
  return found;
}

}  // namespace detail

/// Complete factorization over Q.
inline Factorization<BigRat> factor_q(const QPoly& f) {
  if (f.is_zero()) throw UsageError("factorization of zero");
  Factorization<BigRat> out{f.lc(), {}};
  for (const auto& [part, mult] : squarefree(f)) {
    if (part.degree() == 1) {
      out.factors.emplace_back(part, mult);
      continue;
    }
    for (const auto& z : detail::factor_squarefree_z(detail::to_primitive_z(part)))
      out.factors.emplace_back(monic(detail::from_z(z)), mult);
  }
  detail::sort_factors(out.factors);
  return out;
}

/// Checked constructor: verifies that the modulus is irreducible over Q.
inline FieldPtr make_number_field(const QPoly& modulus) {
  if (modulus.degree() < 1) throw UsageError("number field modulus must be nonconstant");
  if (!factor_q(modulus).is_irreducible()) throw UsageError("number field modulus is reducible over Q");
  return NumberField::unchecked(modulus);
}

namespace detail {

/// Norm_{K/Q} of p in K[x]: Res_t(g(t), p(x) with the generator replaced by t).
inline QPoly norm(const NFPoly& p, const FieldPtr& field) {
  const int dg = field->degree();
  std::vector<QPoly> in_t(dg);  // coefficient of t^j, as a polynomial in x
  for (int i = 0; i <= p.degree(); ++i) {
    const QPoly& c = p.coeffs()[i].value();
    for (int j = 0; j <= c.degree(); ++j) in_t[j] += QPoly::monomial(c.coeffs()[j], i);
  }
  const UPoly<QPoly> P(std::move(in_t));
  const UPoly<QPoly> G = field->modulus().map([](const BigRat& c) { return QPoly(c); });
  return resultant(G, P);
}

/// Trager's algorithm on a monic squarefree polynomial over K.
inline std::vector<NFPoly> trager_squarefree(const NFPoly& s, const FieldPtr& field) {
  if (s.degree() <= 1) return {s};
  const NFElem beta = NFElem::generator(field);
  for (int step = 0;; ++step) {
    const int k = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    const NFElem shift = beta * NFElem(k);
    const NFPoly shifted = s.compose_linear(NFElem(1), -shift);
    const QPoly N = norm(shifted, field);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    const Factorization<BigRat> fn = factor_q(N);
    if (fn.factors.size() == 1) return {s};
    std::vector<NFPoly> out;
    for (const auto& [Nj, mult] : fn.factors) {
      const NFPoly back = lift_to_field(Nj, field).compose_linear(NFElem(1), shift);
      NFPoly h = gcd(s, back);
      if (h.degree() > 0) out.push_back(h);
    }
    return out;
  }
}

}  // namespace detail

/// Complete factorization over K = Q[t]/(g) by Trager's norm method.
inline Factorization<NFElem> factor_nf(const NFPoly& f, const FieldPtr& field) {
  if (f.is_zero()) throw UsageError("factorization of zero");
  const auto lift = [&](const BigRat& c) { return NFElem(field, QPoly(c)); };
  if (field->degree() == 1) {
    // K = Q: substitute the rational generator.
    const BigRat root = -field->modulus().coeff(0);
    const QPoly fq = f.map([&](const NFElem& c) { return c.value().eval(root); });
    auto fact = factor_q(fq);
    Factorization<NFElem> out{lift(fact.unit), {}};
    for (const auto& [g, m] : fact.factors) out.factors.emplace_back(g.map(lift), m);
    return out;
  }
  Factorization<NFElem> out{f.lc(), {}};
  for (const auto& [part, mult] : squarefree(f))
    for (const auto& h : detail::trager_squarefree(part, field)) out.factors.emplace_back(monic(h), mult);
  detail::sort_factors(out.factors);
  return out;
}

/// Factorization of a binary form C(u, v): C = v^power * homogenized
/// factorization of C(u, 1).
struct BinaryFactorization {
  int v_power = 0;
  Factorization<BigRat> affine;
};

inline BinaryFactorization factor_homog_bivariate(const MPoly& C, Var u, Var v) {
  if (C.is_zero() || !C.is_homogeneous()) throw UsageError("factor_homog_bivariate needs a nonzero binary form");
  const QPoly c = binary_dehomogenize(C, u, v);
  return {C.total_degree() - c.degree(), factor_q(c)};
}

}  // namespace bezout

#endif  // BEZOUT_FACTOR_HPP
