#pragma once

#include <string>
#include <vector>

#include "aode/algext.hpp"
#include "aode/groebner.hpp"
#include "aode/polyalg.hpp"

namespace aode {

using SMPoly = MultiPoly<Scalar>;

// Variable positions in the six-variable ring of the prolonged ideal. An
// extension generator, when present, sits at kTheta.
enum ProlongVar : int { kW0 = 0, kW1 = 1, kW2 = 2, kZ0 = 3, kZ1 = 4, kZ2 = 5, kTheta = 6 };

// tildeP1(A(x+1), B(x+1)) = c * tildeP2(A(x), B(x)) and the same for Q, with
// P_i, Q_i coprime of rational-function degree n.
struct DifferenceSystem {
  QPoly P1, Q1, P2, Q2;
  int n = 0;
  Scalar c = Scalar(1);
};

// w^n * p(z/w) as a polynomial in nvars variables.
QMPoly homogenize(const QPoly& p, int n, int nvars, int zvar, int wvar);

// The four generators in w0, w1, w2, z0, z1, z2 (and theta when c is
// irrational; c is folded into the right-hand side). The second element is the
// extension modulus in theta, or zero over Q.
struct ProlongedIdeal {
  std::vector<QMPoly> generators;
  QMPoly modulus;  // in kTheta; zero when the system is over Q
  FieldPtr field;
};
ProlongedIdeal prolonged_ideal(const DifferenceSystem& sys);

// Homogeneous F(v0, v1, v2) standing for u(x), u(x+1), u(x+2).
struct SecondOrderAODE {
  SMPoly F;
  std::string route;  // "resultant" or "groebner"
};

struct SecondOrderPair {
  SecondOrderAODE FA, FB;
};

// Nonzero second-order equations for A and B. Nested resultants first, lex
// Groebner elimination when they vanish; content and repeated factors are
// removed. Throws InvariantViolation if both routes return zero.
SecondOrderPair derive_second_order(const DifferenceSystem& sys);

// Grevlex Groebner basis of the prolonged ideal, including the modulus.
std::vector<QMPoly> prolonged_basis(const ProlongedIdeal& I);

// True when F(v0,v1,v2), read on the z-variables (for_a) or the
// w-variables, reduces to zero modulo `basis` (from prolonged_basis).
bool in_prolonged_ideal(const SMPoly& F, bool for_a, const ProlongedIdeal& I, const std::vector<QMPoly>& basis);

// Conversions between Scalar coefficients and an explicit theta variable.
QMPoly lift_theta(const SMPoly& p, int theta_var, int nvars);
SMPoly drop_theta(const QMPoly& p, int theta_var, const FieldPtr& field, int nvars);

}  // namespace aode
