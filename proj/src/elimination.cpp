#include "aode/elimination.hpp"

namespace aode {

namespace {

// Reduce every power theta^k, k >= deg m, using the monic modulus m.
QMPoly reduce_theta(const QMPoly& p, const QMPoly& modulus) {
  if (modulus.is_zero() || p.degree(kTheta) < modulus.degree(kTheta)) return p;
  const int n = p.nvars();
  const UniPoly<Rational> m = modulus.to_uni(kTheta);
  const int d = m.degree();
  auto cs = p.coeffs_in(kTheta);
  for (int k = static_cast<int>(cs.size()) - 1; k >= d; --k) {
    const QMPoly c = cs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    // theta^k = theta^(k-d) * (theta^d) = -theta^(k-d) * sum_{j<d} m_j theta^j
    for (int j = 0; j < d; ++j)
      cs[static_cast<std::size_t>(k - d + j)] -= m[j] * c;
    cs[static_cast<std::size_t>(k)] = QMPoly(n);
  }
  return QMPoly::from_coeffs_in(n, kTheta, cs);
}

QMPoly scalar_poly(const Scalar& c, int nvars) {
  return QMPoly::from_uni(nvars, kTheta, c.rep());
}

// Scalar multiple making p a primitive integer polynomial with positive
// leading coefficient.
QMPoly primitive(const QMPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1, g = 0;
  for (const auto& t : p.terms()) l = lcm(l, Integer(t.c.get_den()));
  for (const auto& t : p.terms()) g = gcd(g, Integer(t.c * l));
  Rational s(l, g);
  s.canonicalize();
  if (sgn(p.leading().c) < 0) s = -s;
  return s * p;
}

// Nested resultants eliminating e[0], e[2] (from the first and second pair)
// then e[1].
QMPoly nested_resultant(const std::vector<QMPoly>& g, const QMPoly& modulus, const int e[3]) {
  QMPoly s0 = reduce_theta(resultant(g[0], g[1], e[0]), modulus);
  if (s0.is_zero()) return s0;
  QMPoly s2 = reduce_theta(resultant(g[2], g[3], e[2]), modulus);
  if (s2.is_zero()) return s2;
  if (s0.degree(e[1]) <= 0 && s2.degree(e[1]) <= 0) return primitive(s0);
  return primitive(reduce_theta(resultant(s0, s2, e[1]), modulus));
}

QMPoly groebner_eliminant(const ProlongedIdeal& I, const int e[3]) {
  std::vector<QMPoly> gens = I.generators;
  const int n = I.field ? 7 : 6;
  if (I.field) gens.push_back(I.modulus);
  std::vector<bool> keep(static_cast<std::size_t>(n), true);
  for (int k = 0; k < 3; ++k) keep[static_cast<std::size_t>(e[k])] = false;
  for (const auto& g : eliminate(gens, keep)) {
    QMPoly r = reduce_theta(g, I.modulus);
    bool involves = false;
    for (int v = 0; v < 6; ++v) involves = involves || r.depends_on(v);
    if (involves) return primitive(r);
  }
  return QMPoly(n);
}

SecondOrderAODE finish(const QMPoly& raw, const int keep[3], const ProlongedIdeal& I, std::string route) {
  const int n = raw.nvars();
  std::vector<int> map(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < 3; ++k) map[static_cast<std::size_t>(keep[k])] = k;
  if (n > 6) map[kTheta] = 3;
  QMPoly moved = raw.rename(map, I.field ? 4 : 3);
  SMPoly F = I.field ? drop_theta(moved, 3, I.field, 3) : drop_theta(moved, -1, nullptr, 3);
  return {squarefree_part(F), std::move(route)};
}

SecondOrderAODE derive_one(const ProlongedIdeal& I, const int e[3], const int keep[3]) {
  QMPoly r = nested_resultant(I.generators, I.modulus, e);
  if (!r.is_zero()) return finish(r, keep, I, "resultant");
  r = groebner_eliminant(I, e);
  if (r.is_zero()) throw InvariantViolation("elimination of the prolonged system returned zero");
  return finish(r, keep, I, "groebner");
}

}  // namespace

QMPoly homogenize(const QPoly& p, int n, int nvars, int zvar, int wvar) {
  QMPoly r(nvars);
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p[k]) == 0) continue;
    Monomial m;
    m.set(zvar, static_cast<unsigned>(k));
    m.set(wvar, static_cast<unsigned>(n - k));
    r += QMPoly::term(nvars, m, p[k]);
  }
  return r;
}

ProlongedIdeal prolonged_ideal(const DifferenceSystem& sys) {
  if (sys.c.is_zero_rep()) throw InputError("the constant of a difference system must be nonzero");
  if (sys.P1.degree() > sys.n || sys.Q1.degree() > sys.n || sys.P2.degree() > sys.n || sys.Q2.degree() > sys.n)
    throw InvariantViolation("difference system degree exceeds n");
  ProlongedIdeal I;
  I.field = sys.c.is_rational() ? nullptr : sys.c.field();
  const int nv = I.field ? 7 : 6;
  QMPoly c = I.field ? scalar_poly(sys.c, nv) : QMPoly::constant(nv, sys.c.rational_value());
  I.modulus = I.field ? QMPoly::from_uni(nv, kTheta, I.field->modulus) : QMPoly(nv);
  const int n = sys.n;
  auto side = [&](const QPoly& p, int zi, int wi) { return homogenize(p, n, nv, zi, wi); };
  I.generators = {
      side(sys.P1, kZ1, kW1) - reduce_theta(c * side(sys.P2, kZ0, kW0), I.modulus),
      side(sys.Q1, kZ1, kW1) - reduce_theta(c * side(sys.Q2, kZ0, kW0), I.modulus),
      side(sys.P1, kZ2, kW2) - reduce_theta(c * side(sys.P2, kZ1, kW1), I.modulus),
      side(sys.Q1, kZ2, kW2) - reduce_theta(c * side(sys.Q2, kZ1, kW1), I.modulus),
  };
  return I;
}

SecondOrderPair derive_second_order(const DifferenceSystem& sys) {
  const ProlongedIdeal I = prolonged_ideal(sys);
  static const int zs[3] = {kZ0, kZ1, kZ2}, ws[3] = {kW0, kW1, kW2};
  SecondOrderPair out;
  out.FB = derive_one(I, zs, ws);
  out.FA = derive_one(I, ws, zs);
  return out;
}

std::vector<QMPoly> prolonged_basis(const ProlongedIdeal& I) {
  std::vector<QMPoly> gens = I.generators;
  if (I.field) gens.push_back(I.modulus);
  return buchberger(gens, Order::GrevLex);
}

bool in_prolonged_ideal(const SMPoly& F, bool for_a, const ProlongedIdeal& I, const std::vector<QMPoly>& basis) {
  const int nv = I.field ? 7 : 6;
  QMPoly lifted = lift_theta(F, I.field ? 3 : -1, I.field ? 4 : 3);
  std::vector<int> map = for_a ? std::vector<int>{kZ0, kZ1, kZ2, kTheta} : std::vector<int>{kW0, kW1, kW2, kTheta};
  map.resize(static_cast<std::size_t>(lifted.nvars()));
  return normal_form(lifted.rename(map, nv), basis, Order::GrevLex).is_zero();
}

QMPoly lift_theta(const SMPoly& p, int theta_var, int nvars) {
  QMPoly r(nvars);
  for (const auto& t : p.terms()) {
    if (t.c.is_rational()) {
      r += QMPoly::term(nvars, t.m, t.c.rational_value());
      continue;
    }
    if (theta_var < 0) throw InvariantViolation("irrational coefficient without a theta variable");
    const QPoly& rep = t.c.rep();
    for (int k = 0; k <= rep.degree(); ++k) {
      if (sgn(rep[k]) == 0) continue;
      Monomial m = t.m;
      m.set(theta_var, static_cast<unsigned>(k));
      r += QMPoly::term(nvars, m, rep[k]);
    }
  }
  return r;
}

SMPoly drop_theta(const QMPoly& p, int theta_var, const FieldPtr& field, int nvars) {
  std::vector<SMPoly::Term> ts;
  if (theta_var < 0) {
    for (const auto& t : p.terms()) ts.push_back({t.m, Scalar(t.c)});
    return SMPoly(nvars, std::move(ts));
  }
  auto cs = p.coeffs_in(theta_var);
  SMPoly r(nvars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].is_zero()) continue;
    std::vector<Rational> e(k + 1, Rational(0));
    e[k] = 1;
    const Scalar th(field, QPoly(e));
    std::vector<SMPoly::Term> part;
    for (const auto& t : cs[k].terms()) part.push_back({t.m, th * Scalar(t.c)});
    r += SMPoly(nvars, std::move(part));
  }
  return r;
}

}  // namespace aode
