#pragma once

#include <vector>

#include "aode/algext.hpp"
#include "aode/groebner.hpp"

namespace aode {

// One point of a zero-dimensional variety; all coordinates live in `field`
// (null for Q). Points over a field of degree >= 3 stand for all their
// conjugates.
struct AlgebraicPoint {
  FieldPtr field;
  std::vector<Scalar> values;
};

// Points of V(gb) for a lex Groebner basis over Q (variable 0 largest) of a
// zero-dimensional ideal. Variables are solved from the smallest upward; each
// fiber is the gcd of the specialized basis elements, and irrational roots
// over an extension go through a primitive element of the compositum.
std::vector<AlgebraicPoint> solve_zero_dimensional(const std::vector<QMPoly>& gb, int nvars);

// Convenience: lex basis plus the dimension check. Throws InvariantViolation
// when the system has infinitely many solutions.
std::vector<AlgebraicPoint> solve_polynomial_system(const std::vector<QMPoly>& equations, int nvars);

// Scalar polynomial in one variable obtained by evaluating variables != var.
UniPoly<Scalar> specialize_to(const QMPoly& g, int var, const std::vector<Scalar>& values);

// Roots of a polynomial with coefficients in `field` (or Q). Each result
// carries the new field and the image of the old generator in it, so callers
// can move previously computed values along.
struct ExtendedRoot {
  FieldPtr field;
  Scalar value;
  Scalar old_theta;  // image of the old generator (meaningless over Q)
};
std::vector<ExtendedRoot> roots_over(const UniPoly<Scalar>& h, const FieldPtr& field);

// Moves x from the old field into the new one given the image of the old
// generator.
Scalar transport(const Scalar& x, const Scalar& old_theta);

}  // namespace aode
