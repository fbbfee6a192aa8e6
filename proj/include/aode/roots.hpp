#pragma once

#include <utility>
#include <vector>

#include "aode/algext.hpp"
#include "aode/unipoly.hpp"

namespace aode {

// Disjoint closed intervals [lo, hi], each holding exactly one real root of p
// (p nonzero). Sturm sequences plus exact bisection; widths below `width`.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p, const Rational& width);

// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const QPoly& p);

// Distinct non-negative integer roots, ascending.
std::vector<long> nonneg_integer_roots(const QPoly& p);

// Simplest fraction (smallest denominator) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

// One root of a squarefree polynomial factor, represented exactly: rational,
// one of the two roots of a quadratic in Q(sqrt r), or the generator of a
// field whose modulus is the remaining factor.
struct AlgebraicRoot {
  Scalar value;
  QPoly minimal;  // the factor of the input this root belongs to
};

// All roots of p (up to conjugacy for the factors of degree >= 3), using the
// limited factorization: squarefree part, rational roots, quadratic splitting.
std::vector<AlgebraicRoot> algebraic_roots(const QPoly& p);

}  // namespace aode
