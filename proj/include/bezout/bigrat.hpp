#ifndef BEZOUT_BIGRAT_HPP
#define BEZOUT_BIGRAT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bezout/errors.hpp"

namespace bezout {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1, so equality is structural.
class BigRat {
 public:
  BigRat() = default;
  BigRat(int v) : v_(v) {}                       // NOLINT(implicit)
  BigRat(long v) : v_(v) {}                      // NOLINT(implicit)
  BigRat(long long v) : v_(static_cast<long>(v)) {}  // NOLINT(implicit)
  BigRat(const BigInt& n) : v_(n) {}             // NOLINT(implicit)
  BigRat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "n" or "n/d" with an optional leading sign.
  static BigRat parse(std::string_view s) {
    std::string str(s);
    auto slash = str.find('/');
    try {
      if (slash == std::string::npos) return BigRat(BigInt(str, 10));
      return BigRat(BigInt(str.substr(0, slash), 10), BigInt(str.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed rational literal '" + str + "'");
    }
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return BigRat(mpq_class(1) / v_);
  }

  double to_double() const { return v_.get_d(); }

  std::string to_string() const { return v_.get_str(10); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }

  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) { return os << r.to_string(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const BigRat& r) { return r.is_zero(); }
inline BigRat exact_div(const BigRat& a, const BigRat& b) { return a / b; }
inline BigRat abs(const BigRat& r) { return r.sign() < 0 ? -r : r; }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace bezout

#endif  // BEZOUT_BIGRAT_HPP
