#ifndef BEZOUT_PARSER_HPP
#define BEZOUT_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "bezout/bigrat.hpp"
#include "bezout/errors.hpp"
#include "bezout/mpoly.hpp"

namespace bezout {

/*
 * Grammar, loosest binding first:
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := factor (['*'] factor)*        juxtaposition multiplies
 *   factor  := ('+' | '-') factor | power
 *   power   := primary ['^' integer]
 *   primary := number | 'x' | 'y' | 'z' | '(' expr ')'
 *   number  := digits ['.' digits] | digits '/' digits
 *
 * A sign never starts a juxtaposed factor, so "x -y" is a difference.
 */
class PolyParser {
 public:
  static constexpr int kMaxExponent = 1000;

  explicit PolyParser(std::string_view text) : s_(text) {}

  MPoly parse() {
    skip_space();
    if (at_end()) fail("expected a polynomial");
    MPoly p = expr();
    skip_space();
    if (!at_end()) fail(peek() == ')' ? "unbalanced ')'" : std::string("unexpected '") + peek() + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '.';
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      skip_space();
      if (at_end()) fail("expected a term");
      MPoly t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end()) fail("expected a factor");
        acc *= factor();
      } else if (starts_primary(peek())) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    skip_space();
    if (peek() == '-' || peek() == '+') {
      const bool neg = peek() == '-';
      ++pos_;
      skip_space();
      if (at_end()) fail("expected a factor");
      MPoly f = factor();
      return neg ? -f : f;
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    const std::size_t start = pos_;
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
    long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (peek() - '0');
      if (e > kMaxExponent) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (peek() == '.' || peek() == '/') fail("exponent must be an integer");
    skip_space();
    if (peek() == '^') fail("ambiguous repeated '^'; use parentheses");
    return base.pow(static_cast<int>(e));
  }

  MPoly primary() {
    skip_space();
    const char c = peek();
    if (at_end()) fail("expected a factor");
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      skip_space();
      if (peek() == ')') fail("empty parentheses");
      MPoly inner = expr();
      skip_space();
      if (peek() != ')') {
        if (at_end()) throw ParseError(pos_, "expected ')' to close '(' at offset " + std::to_string(open));
        fail("expected ')'");
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return MPoly(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      switch (c) {
        case 'x': return MPoly::x();
        case 'y': return MPoly::y();
        case 'z': return MPoly::z();
        default: throw ParseError(pos_ - 1, std::string("unknown variable '") + c + "' (expected x, y or z)");
      }
    }
    fail(c == ')' ? "unbalanced ')'" : std::string("unexpected '") + c + "'");
  }

  BigRat number() {
    const std::size_t start = pos_;
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    if (peek() == '.') {
      ++pos_;
      std::string frac;
      while (std::isdigit(static_cast<unsigned char>(peek()))) frac += s_[pos_++];
      if (digits.empty() && frac.empty()) throw ParseError(start, "malformed number");
      BigInt den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      return BigRat(BigInt((digits.empty() ? "0" : digits) + frac, 10), den);
    }
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      std::string den;
      while (std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
      const BigInt d(den, 10);
      if (d == 0) throw ParseError(start, "zero denominator");
      return BigRat(BigInt(digits, 10), d);
    }
    return BigRat(BigInt(digits, 10));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline MPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace bezout

#endif  // BEZOUT_PARSER_HPP
