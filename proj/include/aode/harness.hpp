#pragma once

#include <cstdint>
#include <string>

#include "aode/groebner.hpp"
#include "aode/ratfunc.hpp"

namespace aode {

// The curve of (u(t), u(t+1)): squarefree primitive part of
// Res_t(y d1 - n1, z d2 - n2) with factors in y alone or z alone removed,
// scaled to a primitive integer polynomial with positive leading coefficient.
// Throws InputError for constant u.
QMPoly implicitize(const QRatFunc& u);

// Seeded random u = n/d: degrees at most max_degree, integer coefficients in
// [-5, 5], gcd(n, d) = 1, u non-constant. Deterministic in (seed, max_degree).
QRatFunc random_planted(std::uint64_t seed, int max_degree);

struct HarnessInstance {
  QRatFunc planted;
  QMPoly F;
  std::uint64_t seed = 0;
};
HarnessInstance harness_instance(std::uint64_t seed, int max_degree);

// Instance file text with the planted solution and seed as comments.
std::string format_harness(const HarnessInstance& h);

}  // namespace aode
