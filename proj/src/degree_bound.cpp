#include "aode/degree_bound.hpp"

#include <algorithm>
#include <deque>

#include "aode/polyalg.hpp"
#include "aode/roots.hpp"

namespace aode {

SMPoly tilde_transform(const SMPoly& F) {
  if (F.nvars() != 3) throw InvariantViolation("tilde transform expects three variables");
  const SMPoly y = SMPoly::variable(3, 0), z = SMPoly::variable(3, 1), w = SMPoly::variable(3, 2);
  return F.substitute({y, y + z, y + Scalar(2) * z + w});
}

IndicialPolynomial indicial_polynomial(const SMPoly& Ftilde) {
  if (Ftilde.is_zero()) throw InvariantViolation("indicial polynomial of the zero polynomial");
  IndicialPolynomial out;
  out.m = -1;
  for (const auto& t : Ftilde.terms()) {
    const int wt = t.m[1] + 2 * t.m[2];
    if (out.m < 0 || wt < out.m) out.m = wt;
  }
  const UniPoly<Scalar> x = UniPoly<Scalar>::x();
  const UniPoly<Scalar> xx1 = x * (x - UniPoly<Scalar>(Scalar(1)));
  for (const auto& t : Ftilde.terms()) {
    if (t.m[1] + 2 * t.m[2] != out.m) continue;
    out.support.push_back(t.m);
    out.P += t.c * (pow(x, t.m[1]) * pow(xx1, t.m[2]));
  }
  if (out.P.is_zero()) throw InvariantViolation("indicial polynomial vanished");
  return out;
}

std::vector<long> nonneg_integer_roots(const UniPoly<Scalar>& P) {
  if (P.is_zero()) throw InvariantViolation("integer roots of the zero polynomial");
  FieldPtr field;
  for (const auto& c : P.coeffs())
    if (!c.is_rational()) field = c.field();
  if (!field) {
    std::vector<Rational> q;
    for (const auto& c : P.coeffs()) q.push_back(c.rational_value());
    return nonneg_integer_roots(QPoly(std::move(q)));
  }
  // Norm N(t) = Res_theta(m(theta), P(theta, t)); variables theta = 0, t = 1.
  QMPoly H(2);
  QPoly common;
  for (int k = 0; k <= P.degree(); ++k) {
    const QPoly rep = P[k].rep();
    H += QMPoly::from_uni(2, 0, rep) * QMPoly::variable(2, 1, static_cast<unsigned>(k));
    if (!rep.is_zero()) common = common.is_zero() ? rep : gcd(common, rep);
  }
  const QPoly norm = resultant(QMPoly::from_uni(2, 0, field->modulus), H, 0).to_uni(1);
  if (norm.is_zero()) {
    const QPoly g = gcd(field->modulus, common);
    if (g.degree() <= 0 || g.degree() >= field->degree())
      throw InvariantViolation("indicial norm vanished without a proper factor");
    throw SplitRequest(field, g);
  }
  std::vector<long> out;
  for (long d : nonneg_integer_roots(norm))
    if (P.eval(Scalar(d)).is_zero_strict()) out.push_back(d);
  return out;
}

std::vector<long> poly_degree_bound(const SMPoly& F) {
  return nonneg_integer_roots(indicial_polynomial(tilde_transform(F)).P);
}

SeparableBound separable_degree_bound(const SeparableEq& eq) {
  SeparableBound out;
  out.candidates = constant_candidates(eq);
  if (!out.candidates.finite) {
    out.all_constants = true;
    out.N = constants_only_answer(eq).N;
    return out;
  }
  std::deque<Scalar> work;
  for (const auto& c : out.candidates.values)
    if (!c.value.is_zero_rep()) work.push_back(c.value);
  while (!work.empty()) {
    const Scalar c = work.front();
    work.pop_front();
    try {
      CandidateTrace tr;
      tr.c = c;
      tr.second_order = derive_second_order(build_system(eq, c));
      tr.DA = poly_degree_bound(tr.second_order.FA.F);
      tr.DB = poly_degree_bound(tr.second_order.FB.F);
      tr.route_a = tr.second_order.FA.route;
      tr.route_b = tr.second_order.FB.route;
      for (long d : tr.DA) out.N = std::max(out.N, static_cast<int>(d));
      for (long d : tr.DB) out.N = std::max(out.N, static_cast<int>(d));
      out.trace.push_back(std::move(tr));
    } catch (const SplitRequest& s) {
      if (c.is_rational() || s.field != c.field()) throw;
      auto [m1, m2] = split_maps(s);
      work.push_front(m2(c));
      work.push_front(m1(c));
    }
  }
  return out;
}

}  // namespace aode
