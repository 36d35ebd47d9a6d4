#ifndef BEZOUT_ERRORS_HPP
#define BEZOUT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bezout {

/// Caller violated an operation's precondition (mismatched fields, wrong
/// degree routing, reducible data where irreducible is required, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A post-condition the algorithms guarantee was found broken at runtime.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerical root finding gave up.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace bezout

#endif  // BEZOUT_ERRORS_HPP
