#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "aode/algext.hpp"
#include "aode/elimination.hpp"
#include "aode/ratfunc.hpp"

namespace aode {

using SRatFunc = RatFunc<Scalar>;

// F(y, z) stands for F(y(x), y(x+1)); variables y = 0, z = 1.
bool degree_symmetry_check(const QMPoly& F);

// w^d F(y/w, z/w) in variables y = 0, z = 1, w = 2.
QMPoly projective_closure(const QMPoly& F);

// One Galois orbit of singular points of a projective curve.
struct SingularPoint {
  FieldPtr field;                // null when rational
  std::array<Scalar, 3> coords;  // (y : z : w)
  int multiplicity = 0;
  bool ordinary = true;  // tangent cone has distinct lines
  int conjugates = 1;    // number of points in the orbit
};

// All singular points of the homogeneous curve Fh(y, z, w), each orbit once.
// Throws InputError when Fh has a repeated component.
std::vector<SingularPoint> singular_points(const QMPoly& Fh);

struct GenusResult {
  bool supported = true;  // false when some singularity is not ordinary
  int genus = 0;
  int degree = 0;
  std::vector<SingularPoint> singular;
  std::string reason;
};

// Genus of the projective closure by the ordinary-singularity formula.
// Throws InputError if the count proves the curve reducible.
GenusResult genus(const QMPoly& F);

struct Parametrization {
  SRatFunc p1, p2;     // y = p1(t), y(x+1) = p2(t)
  std::string source;  // "line", "conic", "pencil", "cremona", "import"
  FieldPtr field;      // null when both are over Q
};

// Native parametrization: lines, conics (rational point search over a box,
// otherwise a point over a quadratic field), curves with a rational point of
// multiplicity d-1, and curves brought into one of these classes by
// quadratic transformations centered at rational singular points. Rational
// results are normalized by a Moebius map (see README). Every returned
// parametrization has passed verify_parametrization.
std::optional<Parametrization> parametrize(const QMPoly& F, const GenusResult& g);
std::optional<Parametrization> parametrize(const QMPoly& F);

// F(p1, p2) == 0, deg p1 == deg_z F and deg p2 == deg_y F.
bool verify_parametrization(const QMPoly& F, const Parametrization& P);

// Parametrization over Q from an import; not verified here.
Parametrization imported(const QRatFunc& p1, const QRatFunc& p2);

// The Q-coefficient view; throws InvariantViolation on irrational coefficients.
QRatFunc to_rational(const SRatFunc& r);
SRatFunc to_scalar(const QRatFunc& r);

}  // namespace aode
