#pragma once

#include <string>
#include <vector>

#include "aode/elimination.hpp"
#include "aode/ratfunc.hpp"

namespace aode {

// P1(y(x+1)) / Q1(y(x+1)) = P2(y(x)) / Q2(y(x)) with coprime pairs of common
// rational-function degree n >= 1.
struct SeparableEq {
  QPoly P1, Q1, P2, Q2;
  int n = 0;
};

// Validates the invariants; throws InputError otherwise.
SeparableEq make_separable(QPoly P1, QPoly Q1, QPoly P2, QPoly Q2);

// From a proper parametrization (p1, p2): Q1, Q2 monic and one common scalar
// on P1, P2 that makes P1 a primitive integer polynomial. The equation only
// sees the ratio p1/p2 up to that scalar, so nothing else changes.
SeparableEq from_parametrization(const QRatFunc& p1, const QRatFunc& p2);

// w^n P(z/w) for the four sides, in variables z = 0, w = 1.
struct HomogeneousPair {
  QMPoly P1, Q1, P2, Q2;
};
HomogeneousPair homogenize_pair(const SeparableEq& eq);

// P1 Q2 == P2 Q1.
bool equal_sides(const SeparableEq& eq);

// Rule mask bits: bit 0 for the common-point rule, bits 1..4 for the
// head/tail coefficient rules (P head, Q head, P tail, Q tail).
struct Candidate {
  Scalar value;
  unsigned rules = 0;
};

struct CandidateSet {
  bool finite = true;
  std::vector<Candidate> values;  // empty when !finite
};

CandidateSet constant_candidates(const SeparableEq& eq);

// The system solved by (A, B) for one constant c != 0 (c folded into the
// right-hand side downstream).
DifferenceSystem build_system(const SeparableEq& eq, const Scalar& c);

// Both sides agree: every constant is a solution and the bound is 0.
struct ConstantsOnly {
  bool all_constants = true;
  int N = 0;
};
ConstantsOnly constants_only_answer(const SeparableEq& eq);

// Roots of R(c) = Res_z(P1 - c P2, Q1 - c Q2) that have a common root
// witness. Exposed for tests.
std::vector<Scalar> common_point_constants(const SeparableEq& eq);

}  // namespace aode
