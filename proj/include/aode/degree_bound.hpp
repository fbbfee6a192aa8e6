#pragma once

#include <string>
#include <vector>

#include "aode/elimination.hpp"
#include "aode/separable.hpp"

namespace aode {

// F(y, y+z, y+2z+w) in variables y = 0, z = 1, w = 2.
SMPoly tilde_transform(const SMPoly& F);

struct IndicialPolynomial {
  int m = 0;                     // min of i2 + 2 i3 over the support
  std::vector<Monomial> support;  // exponents attaining m
  UniPoly<Scalar> P;
};

// Throws InvariantViolation if the polynomial comes out zero.
IndicialPolynomial indicial_polynomial(const SMPoly& Ftilde);

// Non-negative integer roots, ascending. Over an extension: integer roots of
// the norm, then the ones where P itself vanishes. May raise SplitRequest.
std::vector<long> nonneg_integer_roots(const UniPoly<Scalar>& P);

// Degrees a nonzero polynomial solution of F(u(x), u(x+1), u(x+2)) = 0 can have.
std::vector<long> poly_degree_bound(const SMPoly& F);

struct CandidateTrace {
  Scalar c;
  std::vector<long> DA, DB;  // admissible degrees of A and B
  std::string route_a, route_b;
  SecondOrderPair second_order;
};

struct SeparableBound {
  int N = 0;
  bool all_constants = false;
  CandidateSet candidates;
  std::vector<CandidateTrace> trace;  // one per nonzero candidate (after splits)
};

SeparableBound separable_degree_bound(const SeparableEq& eq);

}  // namespace aode
