#include "aode/zerodim.hpp"

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

bool all_rational(const SPoly& h) {
  for (const auto& c : h.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

QPoly to_rational(const SPoly& h) {
  std::vector<Rational> c;
  for (const auto& x : h.coeffs()) c.push_back(x.rational_value());
  return QPoly(std::move(c));
}

// Lowest-indexed variable of g, or -1 for a constant.
int highest_var(const QMPoly& g) {
  for (int v = 0; v < g.nvars(); ++v)
    if (g.depends_on(v)) return v;
  return -1;
}

// Splits `pt` along a split request on its field.
std::vector<AlgebraicPoint> split_point(const AlgebraicPoint& pt, const SplitRequest& s) {
  auto [m1, m2] = split_maps(s);
  std::vector<AlgebraicPoint> out;
  for (const FieldMap* m : {&m1, &m2}) {
    AlgebraicPoint q{m->to(), {}};
    for (const auto& v : pt.values) q.values.push_back((*m)(v));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

UniPoly<Scalar> specialize_to(const QMPoly& g, int var, const std::vector<Scalar>& values) {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(g.degree(var), 0)) + 1, Scalar(0));
  for (const auto& t : g.terms()) {
    Scalar v(t.c);
    for (int i = 0; i < g.nvars(); ++i) {
      if (i == var) continue;
      for (unsigned k = 0; k < t.m[i]; ++k) v *= values[static_cast<std::size_t>(i)];
    }
    c[t.m[var]] += v;
  }
  return SPoly(std::move(c));
}

Scalar transport(const Scalar& x, const Scalar& old_theta) {
  if (x.is_rational()) return x;
  Scalar acc(0);
  const auto& c = x.rep().coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * old_theta + Scalar(c[i]);
  return acc;
}

std::vector<ExtendedRoot> roots_over(const UniPoly<Scalar>& h_in, const FieldPtr& field) {
  std::vector<ExtendedRoot> out;
  if (h_in.degree() <= 0) return out;
  if (!field || all_rational(h_in)) {
    if (!field) {
      for (const auto& r : algebraic_roots(to_rational(h_in)))
        out.push_back({r.value.field(), r.value, Scalar(0)});
      return out;
    }
    // Rational roots keep the field; irrational ones need the compositum below.
    const QPoly hq = to_rational(h_in);
    bool only_rational = true;
    for (const auto& r : algebraic_roots(hq)) only_rational = only_rational && r.value.is_rational();
    if (only_rational) {
      for (const auto& r : rational_roots(hq)) out.push_back({field, Scalar(r), Scalar::theta(field)});
      return out;
    }
  }
  const SPoly h = h_in.monic();
  if (h.degree() == 1) {
    out.push_back({field, -h[0], Scalar::theta(field)});
    return out;
  }
  // Primitive element gamma = X + k theta of the compositum: N(Y) =
  // Res_theta(m(theta), h(theta, Y - k theta)) squarefree.
  const int dh = h.degree();
  for (long k = 0; k < 64; ++k) {
    const long kk = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    // Variables: theta = 0, Y = 1.
    QMPoly th = QMPoly::variable(2, 0), Y = QMPoly::variable(2, 1);
    QMPoly X = Y - Rational(kk) * th;
    QMPoly H(2), Xp = QMPoly::constant(2, Rational(1));
    for (int i = 0; i <= dh; ++i) {
      H += QMPoly::from_uni(2, 0, h[i].rep()) * Xp;
      Xp = Xp * X;
    }
    QMPoly m = QMPoly::from_uni(2, 0, field->modulus);
    QPoly N = resultant(m, H, 0).to_uni(1);
    if (!is_squarefree(N)) continue;
    for (const auto& g : algebraic_roots(N)) {
      const Scalar gamma = g.value;
      // theta is the common root of m(theta) and h(theta, gamma - k theta).
      SPoly T = SPoly::x();
      SPoly Xg = SPoly(gamma) - Scalar(kk) * T;
      SPoly Hg, Xpow(Scalar(1));
      for (int i = 0; i <= dh; ++i) {
        Hg += lift(h[i].rep()) * Xpow;
        Xpow = Xpow * Xg;
      }
      SPoly G = gcd(lift(field->modulus), Hg);
      if (G.degree() != 1) throw InvariantViolation("compositum generator is not primitive");
      const Scalar theta_val = -G[0];
      out.push_back({gamma.field(), gamma - Scalar(kk) * theta_val, theta_val});
    }
    return out;
  }
  throw InvariantViolation("no primitive element found for the compositum");
}

std::vector<AlgebraicPoint> solve_zero_dimensional(const std::vector<QMPoly>& gb, int nvars) {
  for (const auto& g : gb)
    if (g.is_constant() && !g.is_zero()) return {};
  std::vector<AlgebraicPoint> points{{nullptr, std::vector<Scalar>(static_cast<std::size_t>(nvars), Scalar(0))}};
  for (int j = nvars - 1; j >= 0; --j) {
    std::vector<QMPoly> here;
    for (const auto& g : gb)
      if (highest_var(g) == j) here.push_back(g);
    if (here.empty()) throw InvariantViolation("zero-dimensional solver: free variable");
    std::vector<AlgebraicPoint> next;
    std::vector<AlgebraicPoint> work = std::move(points);
    while (!work.empty()) {
      AlgebraicPoint pt = std::move(work.back());
      work.pop_back();
      try {
        SPoly h;
        for (const auto& g : here) {
          SPoly s = specialize_to(g, j, pt.values);
          h = h.is_zero() ? s : (s.is_zero() ? h : gcd(h, s));
        }
        if (h.is_zero()) throw InvariantViolation("zero-dimensional solver: vanishing fiber");
        for (const auto& r : roots_over(h, pt.field)) {
          AlgebraicPoint q{r.field, {}};
          for (int i = 0; i < nvars; ++i) {
            const Scalar& v = pt.values[static_cast<std::size_t>(i)];
            q.values.push_back(i > j && pt.field && r.field != pt.field ? transport(v, r.old_theta) : v);
          }
          q.values[static_cast<std::size_t>(j)] = r.value;
          next.push_back(std::move(q));
        }
      } catch (const SplitRequest& s) {
        if (s.field != pt.field) throw;
        for (auto& q : split_point(pt, s)) work.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::vector<AlgebraicPoint> solve_polynomial_system(const std::vector<QMPoly>& equations, int nvars) {
  auto gb = buchberger(equations, Order::Lex);
  if (gb.size() == 1 && gb[0].is_constant()) return {};
  if (!is_zero_dimensional(gb, Order::Lex, nvars)) throw InvariantViolation("polynomial system is not zero-dimensional");
  return solve_zero_dimensional(gb, nvars);
}

}  // namespace aode
