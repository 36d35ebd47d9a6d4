#ifndef BEZOUT_NUMBER_FIELD_HPP
#define BEZOUT_NUMBER_FIELD_HPP

#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "bezout/bigrat.hpp"
#include "bezout/errors.hpp"
#include "bezout/upoly.hpp"

namespace bezout {

/// Q[t]/(g(t)) for a monic irreducible g. Instances are immutable and shared
/// through shared_ptr; see make_number_field() in factor.hpp for the checked
/// constructor.
class NumberField {
 public:
  /// Trusts the caller that `modulus` is irreducible over Q.
  static std::shared_ptr<const NumberField> unchecked(QPoly modulus) {
    if (modulus.degree() < 1) throw UsageError("number field modulus must be nonconstant");
    return std::shared_ptr<const NumberField>(new NumberField(monic(modulus)));
  }

  const QPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.modulus_ == b.modulus_; }

 private:
  explicit NumberField(QPoly m) : modulus_(std::move(m)) {}
  QPoly modulus_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/*
 * Element of a number field, stored as its canonical remainder modulo the
 * field's modulus.
 *
 * An element built from a rational (no field attached) is a field-agnostic
 * constant; it adopts the field of whatever it is combined with. This lets
 * generic polynomial code write T(0) and T(1).
 */
class NFElem {
 public:
  NFElem() = default;
  NFElem(int c) : value_(BigRat(c)) {}             // NOLINT(implicit)
  NFElem(const BigRat& c) : value_(c) {}           // NOLINT(implicit)
  NFElem(FieldPtr field, QPoly value) : field_(std::move(field)), value_(std::move(value)) { reduce(); }

  /// The generator t of the field.
  static NFElem generator(const FieldPtr& field) { return NFElem(field, QPoly::x()); }

  const FieldPtr& field() const { return field_; }
  const QPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_rational() const { return value_.degree() <= 0; }
  BigRat rational_value() const {
    if (!is_rational()) throw UsageError("number field element is not rational");
    return value_.coeff(0);
  }

  NFElem operator-() const { return NFElem(field_, -value_, raw_tag{}); }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    return NFElem(common_field(a, b), a.value_ + b.value_, raw_tag{});
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    return NFElem(common_field(a, b), a.value_ - b.value_, raw_tag{});
  }
  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    return NFElem(common_field(a, b), a.value_ * b.value_);
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

  /// Inverse via the extended Euclidean algorithm on (value, modulus).
  NFElem inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in number field");
    if (is_rational()) return NFElem(field_, QPoly(value_.coeff(0).inverse()), raw_tag{});
    auto [g, s, t] = xgcd(value_, field_->modulus());
    if (g.degree() != 0) throw UsageError("number field modulus is reducible");
    return NFElem(field_, s);
  }

  friend bool operator==(const NFElem& a, const NFElem& b) {
    common_field(a, b);
    return a.value_ == b.value_;
  }

  std::string to_string(const std::string& var = "t") const { return value_.debug_string(var); }
  friend std::ostream& operator<<(std::ostream& os, const NFElem& e) { return os << e.to_string(); }

 private:
  struct raw_tag {};
  NFElem(FieldPtr field, QPoly value, raw_tag) : field_(std::move(field)), value_(std::move(value)) {}

  static FieldPtr common_field(const NFElem& a, const NFElem& b) {
    if (!a.field_) return b.field_;
    if (!b.field_ || a.field_ == b.field_) return a.field_;
    if (*a.field_ == *b.field_) return a.field_;
    throw UsageError("number field elements from different fields");
  }

  void reduce() {
    if (!field_ && value_.degree() > 0) throw UsageError("non-constant element without a number field");
    if (field_ && value_.degree() >= field_->degree()) value_ = divmod(value_, field_->modulus()).second;
  }

  FieldPtr field_;
  QPoly value_;
};

inline bool is_zero(const NFElem& e) { return e.is_zero(); }
inline NFElem exact_div(const NFElem& a, const NFElem& b) { return a / b; }

using NFPoly = UPoly<NFElem>;

/// Lifts a rational polynomial into K[x].
inline NFPoly lift_to_field(const QPoly& p, const FieldPtr& field) {
  return p.map([&](const BigRat& c) { return NFElem(field, QPoly(c)); });
}

}  // namespace bezout

#endif  // BEZOUT_NUMBER_FIELD_HPP
