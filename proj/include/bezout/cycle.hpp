#ifndef BEZOUT_CYCLE_HPP
#define BEZOUT_CYCLE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bezout/factor.hpp"
#include "bezout/mpoly.hpp"
#include "bezout/number_field.hpp"

namespace bezout {

/*
 * A Galois-orbit of points written canonically:
 *
 *   PInf        the point (1,0,0)
 *   C0(f)       the points (a,1,0) over the roots a of f(x), f monic
 *               irreducible over Q
 *   C1(h; g)    the points (c,b,1) over the roots b of g(y) and, for each,
 *               the roots c of h(x, b); g monic irreducible over Q, h monic
 *               in x, irreducible over Q[y]/(g), coefficients reduced mod g
 *
 * Distinct canonical data denote disjoint point sets, so structural
 * equality is point-set equality.
 */
class GaloisCycle {
 public:
  enum class Kind { PInf = 0, C0 = 1, C1 = 2 };

  static GaloisCycle pinf() { return GaloisCycle(Kind::PInf); }

  /// C0(f) for f irreducible over Q; f is made monic. Irreducibility is the
  /// caller's responsibility (use canonical_c0 to check).
  static GaloisCycle c0(const QPoly& f) {
    if (f.degree() < 1) throw UsageError("C0 needs a nonconstant polynomial");
    GaloisCycle c(Kind::C0);
    c.f_ = monic(f);
    return c;
  }

  /// C1(h; g) from h over the field Q[y]/(g); h is made monic. Caller
  /// guarantees irreducibility (use canonical_c1 to check).
  static GaloisCycle c1(const NFPoly& h, const FieldPtr& field) {
    if (h.degree() < 1) throw UsageError("C1 needs h of positive x-degree");
    GaloisCycle c(Kind::C1);
    c.g_ = field->modulus();
    const NFPoly hm = monic(h);
    c.h_ = hm.map([&](const NFElem& e) {
      if (e.field() && !(*e.field() == *field)) throw UsageError("C1: h is not over the field of g");
      return e.value();
    });
    return c;
  }

  Kind kind() const { return kind_; }
  const QPoly& f() const { return f_; }
  const QPoly& g() const { return g_; }
  /// Coefficient of x^i is a polynomial in y of degree < deg g.
  const XYPoly& h() const { return h_; }

  /// Number of points: 1, deg f, or deg_x h * deg g.
  std::int64_t size() const {
    switch (kind_) {
      case Kind::PInf: return 1;
      case Kind::C0: return f_.degree();
      case Kind::C1: return static_cast<std::int64_t>(h_.degree()) * g_.degree();
    }
    return 0;
  }

  /// h as a polynomial over the number field defined by g.
  NFPoly h_over(const FieldPtr& field) const {
    return h_.map([&](const QPoly& c) { return NFElem(field, c); });
  }

  std::string f_string() const { return upoly_to_mpoly(f_, Var::X).to_string(); }
  std::string g_string() const { return upoly_to_mpoly(g_, Var::Y).to_string(); }
  /// h printed with x-degree first, e.g. "x^2+x*y+2".
  std::string h_string() const {
    std::vector<std::pair<Monomial, BigRat>> terms;
    for (int i = h_.degree(); i >= 0; --i) {
      const QPoly& c = h_.coeffs()[i];
      for (int j = c.degree(); j >= 0; --j)
        if (!c.coeffs()[j].is_zero()) terms.emplace_back(Monomial(i, j, 0), c.coeffs()[j]);
    }
    return format_terms(terms);
  }

  std::string to_string() const {
    switch (kind_) {
      case Kind::PInf: return "(1,0,0)";
      case Kind::C0: return "C0(" + f_string() + ")";
      case Kind::C1: return "C1(" + h_string() + "; " + g_string() + ")";
    }
    return {};
  }

  /// PInf, then C0 by f, then C1 by (g, h); polynomials compare by degree
  /// then coefficients from the top down.
  friend std::strong_ordering operator<=>(const GaloisCycle& a, const GaloisCycle& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (auto c = compare_poly(a.f_, b.f_); c != 0) return c;
    if (auto c = compare_poly(a.g_, b.g_); c != 0) return c;
    return compare_poly(a.h_, b.h_);
  }
  friend bool operator==(const GaloisCycle& a, const GaloisCycle& b) {
    return a.kind_ == b.kind_ && a.f_ == b.f_ && a.g_ == b.g_ && a.h_ == b.h_;
  }

 private:
  explicit GaloisCycle(Kind k) : kind_(k) {}
  Kind kind_;
  QPoly f_;
  QPoly g_;
  XYPoly h_;
};

/// Checked C0: f must be irreducible over Q.
inline GaloisCycle canonical_c0(const QPoly& f) {
  if (f.degree() < 1 || !factor_q(f).is_irreducible()) throw UsageError("C0 needs an irreducible polynomial");
  return GaloisCycle::c0(f);
}

/// Checked C1: g irreducible over Q, h irreducible over Q[y]/(g). h is given
/// with coefficients in Q[y] (any representatives; they are reduced mod g).
inline GaloisCycle canonical_c1(const XYPoly& h, const QPoly& g) {
  if (g.degree() < 1) throw UsageError("C1 needs a nonconstant g");
  const FieldPtr field = make_number_field(g);
  const NFPoly hk = h.map([&](const QPoly& c) { return NFElem(field, c); });
  if (hk.degree() < 1 || !factor_nf(hk, field).is_irreducible())
    throw UsageError("C1 needs h irreducible over Q[y]/(g)");
  return GaloisCycle::c1(hk, field);
}

inline GaloisCycle canonical_c1(const NFPoly& h, const QPoly& g) {
  return canonical_c1(h.map([](const NFElem& e) { return e.value(); }), g);
}

/// Integer-weighted formal sum of Galois cycles. Zero weights are never
/// stored; iteration follows the GaloisCycle order.
class Cycle {
 public:
  using Map = std::map<GaloisCycle, std::int64_t>;

  Cycle() = default;
  Cycle(std::initializer_list<std::pair<GaloisCycle, std::int64_t>> init) {
    for (const auto& [c, k] : init) add(c, k);
  }

  void add(const GaloisCycle& c, std::int64_t k) {
    if (k == 0) return;
    auto [it, inserted] = entries_.emplace(c, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::int64_t coefficient(const GaloisCycle& c) const {
    auto it = entries_.find(c);
    return it == entries_.end() ? 0 : it->second;
  }
  bool all_positive() const {
    for (const auto& [c, k] : entries_)
      if (k <= 0) return false;
    return true;
  }

  /// Total number of points with multiplicity; only defined when every
  /// coefficient is positive.
  std::int64_t size() const {
    std::int64_t n = 0;
    for (const auto& [c, k] : entries_) {
      if (k < 0) throw UsageError("size of a cycle with a negative coefficient is undefined");
      n += k * c.size();
    }
    return n;
  }

  Cycle& operator+=(const Cycle& o) {
    for (const auto& [c, k] : o.entries_) add(c, k);
    return *this;
  }
  Cycle& operator-=(const Cycle& o) {
    for (const auto& [c, k] : o.entries_) add(c, -k);
    return *this;
  }
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(std::int64_t k, const Cycle& a) {
    Cycle r;
    if (k == 0) return r;
    for (const auto& [c, v] : a.entries_) r.entries_.emplace(c, k * v);
    return r;
  }

  /// "2*(1,0,0) + 2*C0(x^2+x+1) + C1(x^2+x+2; y-1)"; "0" when empty.
  std::string to_string() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, k] : entries_) {
      std::int64_t a = k;
      if (first) {
        if (a < 0) os << "-";
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      if (a < 0) a = -a;
      if (a != 1) os << a << "*";
      os << c.to_string();
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.entries_ == b.entries_; }
  friend std::ostream& operator<<(std::ostream& os, const Cycle& c) { return os << c.to_string(); }

 private:
  Map entries_;
};

inline std::int64_t size(const GaloisCycle& c) { return c.size(); }
inline std::int64_t size(const Cycle& c) { return c.size(); }
inline Cycle cycle_add(const Cycle& a, const Cycle& b) { return a + b; }
inline Cycle cycle_scale(const Cycle& a, std::int64_t k) { return k * a; }

}  // namespace bezout

#endif  // BEZOUT_CYCLE_HPP
