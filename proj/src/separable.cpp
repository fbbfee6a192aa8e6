#include "aode/separable.hpp"

#include <algorithm>

#include "aode/polyalg.hpp"
#include "aode/roots.hpp"

namespace aode {

namespace {

using SPoly = UniPoly<Scalar>;

SPoly lift(const QPoly& p) {
  std::vector<Scalar> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return SPoly(std::move(c));
}

int rf_degree(const QPoly& P, const QPoly& Q) { return std::max(P.degree(), Q.degree()); }

bool has_witness(const SeparableEq& eq, const Scalar& c) {
  SPoly f = lift(eq.P1) - c * lift(eq.P2);
  SPoly g = lift(eq.Q1) - c * lift(eq.Q2);
  return gcd(f, g).degree() > 0;
}

bool same_value(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.rational_value() == b.rational_value();
  return a.field() == b.field() && a.rep() == b.rep();
}

void add(std::vector<Candidate>& out, const Scalar& v, unsigned rule) {
  for (auto& c : out)
    if (same_value(c.value, v)) {
      c.rules |= rule;
      return;
    }
  out.push_back({v, rule});
}

Rational low_coeff(const QPoly& p) { return p[p.low_degree()]; }

}  // namespace

SeparableEq make_separable(QPoly P1, QPoly Q1, QPoly P2, QPoly Q2) {
  if (P1.is_zero() || Q1.is_zero() || P2.is_zero() || Q2.is_zero())
    throw InputError("separable equation with a zero side");
  if (gcd(P1, Q1).degree() > 0 || gcd(P2, Q2).degree() > 0)
    throw InputError("separable equation sides are not in lowest terms");
  const int n = rf_degree(P1, Q1);
  if (n < 1 || rf_degree(P2, Q2) != n) throw InputError("separable equation sides must have equal degree >= 1");
  return {std::move(P1), std::move(Q1), std::move(P2), std::move(Q2), n};
}

SeparableEq from_parametrization(const QRatFunc& p1, const QRatFunc& p2) {
  if (p1.degree() < 1 || p1.degree() != p2.degree())
    throw InputError("parametrization is not proper: deg p1 and deg p2 differ or vanish");
  // RatFunc already has monic denominators.
  const Rational lambda = Rational(primitive_integer(p1.num()).lc() / p1.num().lc());
  return make_separable(lambda * p1.num(), p1.den(), lambda * p2.num(), p2.den());
}

HomogeneousPair homogenize_pair(const SeparableEq& eq) {
  auto h = [&](const QPoly& p) { return homogenize(p, eq.n, 2, 0, 1); };
  return {h(eq.P1), h(eq.Q1), h(eq.P2), h(eq.Q2)};
}

bool equal_sides(const SeparableEq& eq) { return eq.P1 * eq.Q2 == eq.P2 * eq.Q1; }

std::vector<Scalar> common_point_constants(const SeparableEq& eq) {
  // Variables: z = 0, c = 1.
  const QMPoly c = QMPoly::variable(2, 1);
  auto up = [](const QPoly& p) { return QMPoly::from_uni(2, 0, p); };
  const QMPoly f = up(eq.P1) - c * up(eq.P2), g = up(eq.Q1) - c * up(eq.Q2);
  const QPoly R = resultant(f, g, 0).to_uni(1);
  if (R.is_zero()) throw InvariantViolation("common-point resultant vanishes for unequal sides");
  std::vector<Scalar> out;
  std::vector<QPoly> work{squarefree_part(R)};
  while (!work.empty()) {
    QPoly factor = std::move(work.back());
    work.pop_back();
    try {
      std::vector<Scalar> kept;
      for (const auto& r : algebraic_roots(factor))
        if (has_witness(eq, r.value)) kept.push_back(r.value);
      out.insert(out.end(), kept.begin(), kept.end());
    } catch (const SplitRequest& s) {
      work.push_back(s.factor);
      work.push_back(exact_quotient(s.field->modulus, s.factor));
    }
  }
  return out;
}

CandidateSet constant_candidates(const SeparableEq& eq) {
  CandidateSet out;
  if (equal_sides(eq)) {
    out.finite = false;
    return out;
  }
  std::vector<Candidate> rat, irr;
  for (const auto& v : common_point_constants(eq)) add(v.is_rational() ? rat : irr, v, 1u);
  auto rule = [&](bool cond, const Rational& a, const Rational& b, unsigned bit) {
    if (!cond) return;
    add(rat, Scalar(Rational(a / b)), bit);
    add(rat, Scalar(0), bit);
  };
  rule(eq.P1.degree() == eq.P2.degree(), eq.P1.lc(), eq.P2.lc(), 2u);
  rule(eq.Q1.degree() == eq.Q2.degree(), eq.Q1.lc(), eq.Q2.lc(), 4u);
  rule(eq.P1.low_degree() == eq.P2.low_degree(), low_coeff(eq.P1), low_coeff(eq.P2), 8u);
  rule(eq.Q1.low_degree() == eq.Q2.low_degree(), low_coeff(eq.Q1), low_coeff(eq.Q2), 16u);
  std::sort(rat.begin(), rat.end(),
            [](const Candidate& a, const Candidate& b) { return a.value.rational_value() < b.value.rational_value(); });
  out.values = std::move(rat);
  out.values.insert(out.values.end(), irr.begin(), irr.end());
  return out;
}

DifferenceSystem build_system(const SeparableEq& eq, const Scalar& c) {
  if (c.is_zero_rep()) throw InputError("the constant c must be nonzero");
  return {eq.P1, eq.Q1, eq.P2, eq.Q2, eq.n, c};
}

ConstantsOnly constants_only_answer(const SeparableEq& eq) {
  if (!equal_sides(eq)) throw InvariantViolation("constants-only answer requested for unequal sides");
  return {};
}

}  // namespace aode
