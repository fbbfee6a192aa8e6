#pragma once

#include <vector>

#include "aode/multipoly.hpp"

namespace aode {

using QMPoly = MultiPoly<Rational>;

// Leading monomial and coefficient of p under `ord`.
Monomial leading_monomial(const QMPoly& p, Order ord);

// Reduced Groebner basis (monic, sorted by ascending leading monomial) of the
// ideal generated by gens. Buchberger with normal selection and the product
// and chain criteria (Gebauer-Moeller update). Zero generators are ignored;
// the unit ideal yields {1}.
std::vector<QMPoly> buchberger(const std::vector<QMPoly>& gens, Order ord);

// Full normal form of p with respect to g (any finite set) under `ord`.
QMPoly normal_form(const QMPoly& p, const std::vector<QMPoly>& g, Order ord);

// Generators of ideal(gens) intersected with the subring in the variables
// flagged in keep. Lex order with the eliminated variables ranked highest.
// Returned polynomials use the original variable positions.
std::vector<QMPoly> eliminate(const std::vector<QMPoly>& gens, const std::vector<bool>& keep);

// True when the lex basis describes finitely many points (every variable has
// a pure power among the leading monomials).
bool is_zero_dimensional(const std::vector<QMPoly>& gb, Order ord, int nvars);

}  // namespace aode
