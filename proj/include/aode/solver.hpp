#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aode/curve.hpp"
#include "aode/degree_bound.hpp"
#include "aode/roots.hpp"
#include "aode/separable.hpp"

namespace aode {

// Default for the AODE_MAX_DEGREE cap on M.
inline constexpr int kDefaultMaxDegree = 12;

// Roots of F(u, u). When F(u, u) vanishes identically every constant solves F.
struct ConstantSolutions {
  bool all = false;
  std::vector<AlgebraicRoot> roots;  // conjugates of a cubic or higher factor share one entry
};
ConstantSolutions constant_solutions(const QMPoly& F);

// Numerator of F(y(x), y(x+1)) is the zero polynomial.
bool verify_solution(const QMPoly& F, const SRatFunc& y);
bool verify_solution(const QMPoly& F, const QRatFunc& y);

// Rejects F that is constant, free of z, or visibly reducible (a factor in y
// or z alone, a repeated factor). Throws InputError.
void check_instance(const QMPoly& F);

// All non-constant y = A/B with max(deg A, deg B) <= M, B monic, one member
// per shift family (the coefficient below the leading one of B, or of A when
// B = 1, is zero). Solves the coefficient system of the numerator of
// F(y(x), y(x+1)) with a Rabinowitsch variable for gcd(A, B) = 1.
std::vector<SRatFunc> ansatz_search(const QMPoly& F, int M);

// Parameter-space search: omega = A/B with max(deg A, deg B) <= max_degree
// solving tildeP1(A(x+1), B(x+1)) = c tildeP2(A, B) and the same for Q, for
// every c in the trace, with degrees restricted to the admissible sets (and 0).
std::vector<SRatFunc> parameter_search(const SeparableEq& eq, const SeparableBound& bound, int max_degree);

// y1(x + c0) = y2(x) for some constant c0 (algebraic in general).
bool same_shift_family(const SRatFunc& y1, const SRatFunc& y2);
// The constants c0, when rational.
std::vector<Rational> rational_shifts(const SRatFunc& y1, const SRatFunc& y2);

enum class Status { Solved, Null, ConstantsOnly, UnsupportedParametrization };
std::string to_string(Status s);

struct SolutionEntry {
  SRatFunc y;
  bool verified = false;
  int family = 0;  // index of the shift family (display merging)
};

enum class Search { Direct, Parameter };

struct SolveOptions {
  int max_degree = kDefaultMaxDegree;       // cap on M
  Search search = Search::Direct;           // ansatz_search(F, M) or parameter_search
  std::optional<std::pair<QRatFunc, QRatFunc>> import;  // user parametrization
  bool stop_after_bound = false;            // the `bound` verb
};

struct SolutionReport {
  Status status = Status::Null;
  std::string reason;  // machine-readable cause for Null / Unsupported
  std::vector<SolutionEntry> solutions;
  bool shift_family_note = false;  // y(x + c) is a strong rational general solution
  int N = 0, M = 0;
  bool capped = false;  // M was lowered to the cap
  bool bound_computed = false;
  CandidateSet candidates;
  std::vector<CandidateTrace> trace;
  bool certificate = false;  // every reported solution verified
  std::optional<GenusResult> genus;
  std::optional<Parametrization> parametrization;
  ConstantSolutions constants;
};

// The reduced pipeline: degree symmetry, genus, parametrization, separable
// equation, bound N, M = N deg p1, search, verification.
SolutionReport solve_autonomous(const QMPoly& F, const SolveOptions& options = {});

// AODE_MAX_DEGREE when set to a positive integer, else the default.
int max_degree_from_env();

}  // namespace aode
