#pragma once

#include <string>
#include <vector>

#include "aode/algext.hpp"
#include "aode/groebner.hpp"
#include "aode/ratfunc.hpp"

namespace aode {

// Expression grammar shared by instance files, parametrization imports and
// the CLI:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | primary)*     juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := number | name | '(' expr ')'
//   number  := digits ('.' digits)?
//
// Errors are InputError with 1-based line and column; `line` is the line the
// text came from, columns count from the start of `text`.

// Polynomial in the named variables; division only by nonzero constants.
QMPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars, std::size_t line = 1,
                        std::size_t column_offset = 0);

// Univariate rational function in `var`.
QRatFunc parse_ratfunc(const std::string& text, const std::string& var, std::size_t line = 1,
                       std::size_t column_offset = 0);

// Printing. Terms in descending graded order, integer-friendly layout, e.g.
// "12*y*z^2 - 12*y^2*z + 49*z^2". parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const QMPoly& p, const std::vector<std::string>& vars);
std::string format_polynomial(const MultiPoly<Scalar>& p, const std::vector<std::string>& vars);
std::string format_poly(const QPoly& p, const std::string& var);
std::string format_poly(const UniPoly<Scalar>& p, const std::string& var);
// "(num)/(den)", or just the numerator over 1.
std::string format_ratfunc(const QRatFunc& r, const std::string& var);
std::string format_ratfunc(const RatFunc<Scalar>& r, const std::string& var);

// Numerator and denominator with integer coefficients: num/den = r, den has
// positive leading coefficient and the pair has coprime integer content.
std::pair<QPoly, QPoly> integer_form(const QRatFunc& r);

// The instance file: one line `F: <polynomial in y, z>`, optional lines
// `p1 = <expr in t>` and `p2 = <expr in t>`, '#' comments, blank lines.
struct InstanceText {
  QMPoly F;  // variables y = 0, z = 1
  bool has_parametrization = false;
  QRatFunc p1, p2;
};
InstanceText parse_instance(const std::string& text);

// Just the `p1 = ...` / `p2 = ...` lines (both required).
std::pair<QRatFunc, QRatFunc> parse_parametrization_file(const std::string& text);

// Canonical instance text for F: "F: <format_polynomial(F, {y, z})>\n".
std::string format_instance(const QMPoly& F);

}  // namespace aode
