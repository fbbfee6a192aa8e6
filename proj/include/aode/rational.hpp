#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aode {

using Integer = mpz_class;
using Rational = mpq_class;

// Malformed user input. Line and column are 1-based; 0 means unknown.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A theorem-backed invariant failed; always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_one(const Rational& a) { return a == 1; }
inline Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw InvariantViolation("division by zero rational");
  return 1 / a;
}

inline std::string to_string(const Rational& a) { return a.get_str(); }

// True and sets root when a >= 0 is the square of a rational.
bool rational_sqrt(const Rational& a, Rational& root);

// Writes a = s^2 * r with r a squarefree integer (sign kept in r), a nonzero.
// Trial division strips square factors; the cofactor left over after the
// search bound is kept in r, so r is squarefree only up to that bound.
void square_split(const Rational& a, Rational& s, Integer& r);

}  // namespace aode
