#include "aode/curve.hpp"

#include <algorithm>
#include <numeric>

#include "aode/polyalg.hpp"
#include "aode/roots.hpp"
#include "aode/zerodim.hpp"

namespace aode {

namespace {

using SPoly = UniPoly<Scalar>;
using Vec3 = std::array<Scalar, 3>;

// Homogeneous parametrization (Y(t) : Z(t) : W(t)).
using HomParam = std::array<SPoly, 3>;

SMPoly lift(const QMPoly& p) {
  std::vector<SMPoly::Term> ts;
  for (const auto& t : p.terms()) ts.push_back({t.m, Scalar(t.c)});
  return SMPoly(p.nvars(), std::move(ts));
}

SPoly lift(const QPoly& p) {
  std::vector<Scalar> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return SPoly(std::move(c));
}

bool all_rational(const SPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

QPoly rational_poly(const SPoly& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coeffs()) c.push_back(x.rational_value());
  return QPoly(std::move(c));
}

FieldPtr field_of(const HomParam& X) {
  for (const auto& p : X)
    for (const auto& c : p.coeffs())
      if (!c.is_rational()) return c.field();
  return nullptr;
}

// ---------------------------------------------------------------------------
// Singular points

struct Chart {
  int fixed;          // coordinate set to 1
  int u, v;           // local coordinates
  bool v_zero;        // restrict to v = 0 (points at infinity)
  bool u_zero;        // restrict to u = 0 as well
};

constexpr Chart kCharts[3] = {{2, 0, 1, false, false}, {0, 1, 2, true, false}, {1, 0, 2, true, true}};

QMPoly chart_poly(const QMPoly& Fh, const Chart& c) {
  QMPoly L = Fh.eval(c.fixed, Rational(1));
  std::vector<int> map(3, 0);
  map[static_cast<std::size_t>(c.u)] = 0;
  map[static_cast<std::size_t>(c.v)] = 1;
  return L.rename(map, 2);
}

struct LocalPoint {
  FieldPtr field;
  Scalar a, b;
  int multiplicity = 0;
  bool ordinary = true;
};

// Multiplicity and tangent-cone test at (a, b); may raise SplitRequest.
void analyze(const QMPoly& L, LocalPoint& p) {
  const SMPoly u = SMPoly::variable(2, 0), v = SMPoly::variable(2, 1);
  const SMPoly S = lift(L).substitute({u + SMPoly::constant(2, p.a), v + SMPoly::constant(2, p.b)});
  int m = -1;
  for (int k = 0; k <= S.total_degree() && m < 0; ++k)
    for (const auto& t : S.terms())
      if (static_cast<int>(t.m.deg) == k && !t.c.is_zero_strict()) {
        m = k;
        break;
      }
  if (m < 0) throw InvariantViolation("local expansion vanished at a curve point");
  p.multiplicity = m;
  if (m <= 1) return;
  // Tangent cone T(u, v) of degree m; dehomogenize at v = 1.
  std::vector<Scalar> c(static_cast<std::size_t>(m) + 1, Scalar(0));
  for (const auto& t : S.terms())
    if (static_cast<int>(t.m.deg) == m) c[t.m[0]] = t.c;
  SPoly T(c);
  int e = T.degree();
  while (e >= 0 && T[e].is_zero_strict()) --e;
  if (m - e > 1) {
    p.ordinary = false;
    return;
  }
  p.ordinary = e <= 1 || gcd(T, T.derivative()).degree() == 0;
}

std::vector<LocalPoint> analyze_all(const QMPoly& L, std::vector<AlgebraicPoint> pts) {
  std::vector<LocalPoint> out;
  while (!pts.empty()) {
    AlgebraicPoint pt = std::move(pts.back());
    pts.pop_back();
    LocalPoint lp{pt.field, pt.values[0], pt.values[1]};
    try {
      analyze(L, lp);
      if (lp.multiplicity >= 2) out.push_back(lp);
    } catch (const SplitRequest& s) {
      if (s.field != pt.field) throw;
      auto [m1, m2] = split_maps(s);
      for (const FieldMap* m : {&m1, &m2}) pts.push_back({m->to(), {(*m)(pt.values[0]), (*m)(pt.values[1])}});
    }
  }
  return out;
}

// Galois orbits: a point over a field of degree k whose coordinates generate
// that field stands for k points. Orbits are told apart by the minimal
// polynomial of a separating form u + k v.
std::vector<std::pair<LocalPoint, int>> orbits(const std::vector<LocalPoint>& pts) {
  std::vector<std::pair<LocalPoint, int>> out;
  std::vector<LocalPoint> irr;
  for (const auto& p : pts) {
    if (!p.field) {
      bool dup = false;
      for (const auto& [q, n] : out) dup = dup || (!q.field && q.a == p.a && q.b == p.b);
      if (!dup) out.push_back({p, 1});
    } else {
      irr.push_back(p);
    }
  }
  if (irr.empty()) return out;
  for (long step = 0; step < 200; ++step) {
    const long k = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
    std::vector<QPoly> keys;
    bool ok = true;
    for (const auto& p : irr) {
      QPoly mp = minimal_polynomial(p.a + Scalar(k) * p.b);
      if (mp.degree() != p.field->degree()) {
        ok = false;
        break;
      }
      keys.push_back(mp);
    }
    for (std::size_t i = 0; ok && i < keys.size(); ++i)
      for (std::size_t j = i + 1; ok && j < keys.size(); ++j)
        if (keys[i] != keys[j] && gcd(keys[i], keys[j]).degree() > 0) ok = false;
    if (!ok) continue;
    std::vector<QPoly> seen;
    for (std::size_t i = 0; i < irr.size(); ++i) {
      if (std::find(seen.begin(), seen.end(), keys[i]) != seen.end()) continue;
      seen.push_back(keys[i]);
      out.push_back({irr[i], keys[i].degree()});
    }
    return out;
  }
  throw InvariantViolation("no separating linear form for singular points");
}

// ---------------------------------------------------------------------------
// Homogeneous parametrizations

HomParam strip_gcd(HomParam X) {
  SPoly g;
  for (const auto& p : X)
    if (!p.is_zero()) g = g.is_zero() ? p : gcd(g, p);
  if (g.degree() > 0)
    for (auto& p : X)
      if (!p.is_zero()) p = exact_quotient(p, g);
  // Scale so the first nonzero leading coefficient among W, Y, Z is 1.
  for (int i : {2, 0, 1}) {
    if (X[static_cast<std::size_t>(i)].is_zero()) continue;
    const Scalar inv = inverse(X[static_cast<std::size_t>(i)].lc());
    for (auto& p : X) p = inv * p;
    break;
  }
  return X;
}

int hom_degree(const HomParam& X) {
  int D = 0;
  for (const auto& p : X) D = std::max(D, p.degree());
  return D;
}

// X(t) with t = (alpha s + beta) / (gamma s + delta), homogenized.
HomParam moebius(const HomParam& X, const Rational& alpha, const Rational& beta, const Rational& gamma,
                 const Rational& delta) {
  const int D = hom_degree(X);
  const QPoly num(std::vector<Rational>{beta, alpha}), den(std::vector<Rational>{delta, gamma});
  std::vector<QPoly> np{QPoly(Rational(1))}, dp{QPoly(Rational(1))};
  for (int i = 1; i <= D; ++i) {
    np.push_back(np.back() * num);
    dp.push_back(dp.back() * den);
  }
  HomParam out;
  for (std::size_t i = 0; i < 3; ++i)
    for (int k = 0; k <= X[i].degree(); ++k)
      out[i] += X[i][k] * lift(np[static_cast<std::size_t>(k)] * dp[static_cast<std::size_t>(D - k)]);
  return out;
}

// A projective value of t: (a : b), b = 0 for infinity.
struct Place {
  Rational a, b;
};

// Rational places of X over the point T, in a fixed order (infinity first).
std::vector<Place> places_over(const HomParam& X, const std::array<Rational, 3>& T) {
  std::vector<Place> out;
  std::array<QPoly, 3> q;
  for (std::size_t i = 0; i < 3; ++i) q[i] = rational_poly(X[i]);
  const int D = hom_degree(X);
  // t = infinity: the top coefficient vector.
  std::array<Rational, 3> top;
  for (std::size_t i = 0; i < 3; ++i) top[i] = q[i][D];
  auto proportional = [&](const std::array<Rational, 3>& v) {
    return v[0] * T[1] == v[1] * T[0] && v[0] * T[2] == v[2] * T[0] && v[1] * T[2] == v[2] * T[1];
  };
  if (proportional(top)) out.push_back({1, 0});
  QPoly g;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      QPoly c = T[j] * q[i] - T[i] * q[j];
      if (!c.is_zero()) g = g.is_zero() ? c : gcd(g, c);
    }
  if (g.is_zero() || g.degree() <= 0) return out;
  for (const auto& r : rational_roots(g)) out.push_back({r, 1});
  return out;
}

// Rational parametrizations are normalized by a Moebius map sending the place
// over (1:1:0) to t = infinity, the one over (1:0:0) to t = 0 and the one over
// (0:1:0) to t = -1, as far as those places are rational.
HomParam canonicalize(const HomParam& X) {
  if (field_of(X)) return X;
  const std::array<std::array<Rational, 3>, 3> targets = {
      {{Rational(1), Rational(1), Rational(0)}, {Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}}};
  const Place defaults[3] = {{1, 0}, {0, 1}, {-1, 1}};
  std::array<std::optional<Place>, 3> tau;
  auto same = [](const Place& p, const Place& q) { return p.a * q.b == q.a * p.b; };
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto& p : places_over(X, targets[k])) {
      bool taken = false;
      for (std::size_t j = 0; j < k; ++j) taken = taken || (tau[j] && same(*tau[j], p));
      if (!taken) {
        tau[k] = p;
        break;
      }
    }
  // Fill the missing roles with defaults that avoid the chosen places.
  std::array<Place, 3> t;
  for (std::size_t k = 0; k < 3; ++k) {
    if (tau[k]) {
      t[k] = *tau[k];
      continue;
    }
    Place cand = defaults[k];
    for (long n = 1;; ++n) {
      bool clash = false;
      for (std::size_t j = 0; j < 3; ++j) clash = clash || (tau[j] && same(*tau[j], cand)) || (j < k && same(t[j], cand));
      if (!clash) break;
      cand = {Rational(n), 1};
    }
    t[k] = cand;
  }
  // psi(t) = -L2(t) det(t3, t1) / (L1(t) det(t3, t2)), L_i(t) = b_i t - a_i.
  auto det = [](const Place& p, const Place& q) { return Rational(p.a * q.b - q.a * p.b); };
  const Rational d31 = det(t[2], t[0]), d32 = det(t[2], t[1]);
  // psi as a matrix [m00 m01; m10 m11] acting on (t : 1).
  const Rational m00 = -d31 * t[1].b, m01 = d31 * t[1].a;
  const Rational m10 = d32 * t[0].b, m11 = -d32 * t[0].a;
  // Inverse (up to scale): t = (m11 s - m01) / (-m10 s + m00).
  return strip_gcd(moebius(X, m11, -m01, -m10, m00));
}

// Lines through P (multiplicity r on Fh of degree d): the residual
// intersection point G_d(t) P - G_r(t) Q(t).
HomParam pencil(const SMPoly& Fh, const Vec3& P, int r) {
  const int d = Fh.total_degree();
  Vec3 Q0, Q1;
  if (!P[2].is_zero_rep()) {
    Q0 = {Scalar(1), Scalar(0), Scalar(0)};
    Q1 = {Scalar(0), Scalar(1), Scalar(0)};
  } else if (!P[0].is_zero_rep()) {
    Q0 = {Scalar(0), Scalar(0), Scalar(1)};
    Q1 = {Scalar(0), Scalar(1), Scalar(0)};
  } else {
    Q0 = {Scalar(0), Scalar(0), Scalar(1)};
    Q1 = {Scalar(1), Scalar(0), Scalar(0)};
  }
  // Ring (s, t).
  const SMPoly s = SMPoly::variable(2, 0), t = SMPoly::variable(2, 1);
  std::vector<SMPoly> img;
  for (std::size_t i = 0; i < 3; ++i)
    img.push_back(SMPoly::constant(2, P[i]) + s * (SMPoly::constant(2, Q0[i]) + Q1[i] * t));
  const auto cs = Fh.substitute(img).coeffs_in(0);
  for (int k = 0; k < r && k < static_cast<int>(cs.size()); ++k)
    if (!cs[static_cast<std::size_t>(k)].is_zero()) throw InvariantViolation("pencil center has lower multiplicity");
  if (static_cast<int>(cs.size()) <= d) throw InvariantViolation("pencil line lies on the curve");
  const SPoly Gr = static_cast<int>(cs.size()) > r ? cs[static_cast<std::size_t>(r)].to_uni(1) : SPoly();
  const SPoly Gd = cs[static_cast<std::size_t>(d)].to_uni(1);
  HomParam X;
  for (std::size_t i = 0; i < 3; ++i) {
    const SPoly Qi = SPoly(Q0[i]) + SPoly(Q1[i]) * SPoly::x();
    X[i] = SPoly(P[i]) * Gd - Gr * Qi;
  }
  return strip_gcd(X);
}

// Affine rational points with y = a/b, |a|, b <= H, in height order.
std::vector<Vec3> affine_rational_points(const QMPoly& F, int H, std::size_t want) {
  std::vector<Vec3> out;
  std::vector<Rational> ys;
  for (int h = 0; h <= H; ++h)
    for (int b = 1; b <= std::max(h, 1); ++b)
      for (int a = -h; a <= h; ++a) {
        if (std::max(std::abs(a), b) != h && !(h == 0 && a == 0 && b == 1)) continue;
        if (std::gcd(std::abs(a), b) != 1) continue;
        ys.emplace_back(a, b);
      }
  for (auto& y0 : ys) {
    y0.canonicalize();
    const QPoly g = F.eval(0, y0).to_uni(1);
    if (g.degree() <= 0) continue;
    for (const auto& z0 : rational_roots(g)) {
      out.push_back({Scalar(y0), Scalar(z0), Scalar(1)});
      if (out.size() >= want) return out;
    }
  }
  return out;
}

// Rational points at infinity: roots of the top form.
std::vector<Vec3> points_at_infinity(const QMPoly& F) {
  std::vector<Vec3> out;
  const int d = F.total_degree();
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1, Rational(0));  // coefficient of y^i z^(d-i)
  for (const auto& t : F.terms())
    if (static_cast<int>(t.m.deg) == d) c[t.m[0]] = t.c;
  const QPoly top(c);  // in y with z = 1
  for (const auto& r : rational_roots(top)) out.push_back({Scalar(r), Scalar(1), Scalar(0)});
  if (top.degree() < d) out.push_back({Scalar(1), Scalar(0), Scalar(0)});
  return out;
}

// A point of the conic Fh: rational if one is found, else over a quadratic field.
Vec3 conic_point(const QMPoly& Fh, const std::vector<Vec3>& hints) {
  for (const auto& h : hints) return h;
  QMPoly F = Fh.eval(2, Rational(1));
  std::vector<int> keep{0, 1, 0};
  F = F.rename(keep, 2);
  auto inf = points_at_infinity(F);
  if (!inf.empty()) return inf.front();
  auto aff = affine_rational_points(F, 100, 1);
  if (!aff.empty()) return aff.front();
  // Intersect with a rational line y = y0 where the restriction is quadratic.
  for (long y0 = 0;; ++y0) {
    for (long sgn_y : {1L, -1L}) {
      const QPoly g = F.eval(0, Rational(sgn_y * y0)).to_uni(1);
      if (g.degree() != 2) continue;
      for (const auto& r : algebraic_roots(g)) return {Scalar(Rational(sgn_y * y0)), r.value, Scalar(1)};
    }
  }
}

// ---------------------------------------------------------------------------
// Quadratic transformations

using Mat3 = std::array<std::array<Rational, 3>, 3>;

QMPoly linear_change(const QMPoly& Fh, const Mat3& A) {
  std::vector<QMPoly> img;
  for (std::size_t i = 0; i < 3; ++i) {
    QMPoly row(3);
    for (std::size_t j = 0; j < 3; ++j) row += A[i][j] * QMPoly::variable(3, static_cast<int>(j));
    img.push_back(row);
  }
  return Fh.substitute(img);
}

Rational det3(const Mat3& A) {
  return A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
         A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
}

Mat3 inverse3(const Mat3& A) {
  const Rational D = det3(A);
  Mat3 R;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      R[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (A[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * A[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
           A[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * A[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)]) /
          D;
    }
  return R;
}

// Strict transform of Fh under (x0 : x1 : x2) -> (x1 x2 : x0 x2 : x0 x1).
QMPoly cremona(const QMPoly& Fh) {
  const QMPoly x0 = QMPoly::variable(3, 0), x1 = QMPoly::variable(3, 1), x2 = QMPoly::variable(3, 2);
  QMPoly G = Fh.substitute({x1 * x2, x0 * x2, x0 * x1});
  Monomial low;
  for (int i = 0; i < 3; ++i) {
    unsigned lo = ~0u;
    for (const auto& t : G.terms()) lo = std::min(lo, static_cast<unsigned>(t.m[i]));
    low.set(i, lo);
  }
  std::vector<QMPoly::Term> ts;
  for (const auto& t : G.terms()) ts.push_back({low.quotient_of(t.m), t.c});
  QMPoly out(3, std::move(ts));
  Integer l = 1, g = 0;
  for (const auto& t : out.terms()) l = lcm(l, Integer(t.c.get_den()));
  for (const auto& t : out.terms()) { const Rational v = t.c * l; g = gcd(g, Integer(v.get_num())); }
  return Rational(l, g) * out;
}

Vec3 apply(const Mat3& A, const Vec3& x) {
  Vec3 r{Scalar(0), Scalar(0), Scalar(0)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i] += Scalar(A[i][j]) * x[j];
  return r;
}

struct Route {
  HomParam X;
  std::string source;
};

std::optional<Route> parametrize_projective(const QMPoly& Fh, const std::vector<SingularPoint>& sing,
                                            const std::vector<Vec3>& hints, int depth);

std::optional<Route> via_cremona(const QMPoly& Fh, const std::vector<SingularPoint>& sing, const std::vector<Vec3>& hints,
                                 int depth) {
  const int d = Fh.total_degree();
  std::vector<const SingularPoint*> rat;
  for (const auto& p : sing)
    if (!p.field) rat.push_back(&p);
  std::optional<std::array<const SingularPoint*, 3>> best;
  int best_sum = d;
  for (std::size_t i = 0; i < rat.size(); ++i)
    for (std::size_t j = i + 1; j < rat.size(); ++j)
      for (std::size_t k = j + 1; k < rat.size(); ++k) {
        Mat3 A;
        for (std::size_t r = 0; r < 3; ++r) {
          A[r][0] = rat[i]->coords[r].rational_value();
          A[r][1] = rat[j]->coords[r].rational_value();
          A[r][2] = rat[k]->coords[r].rational_value();
        }
        if (sgn(det3(A)) == 0) continue;
        const int sum = rat[i]->multiplicity + rat[j]->multiplicity + rat[k]->multiplicity;
        if (sum > best_sum) {
          best_sum = sum;
          best = std::array<const SingularPoint*, 3>{rat[i], rat[j], rat[k]};
        }
      }
  if (!best) return std::nullopt;
  Mat3 A;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) A[r][c] = (*best)[c]->coords[r].rational_value();
  const QMPoly G = cremona(linear_change(Fh, A));
  if (G.total_degree() >= d) return std::nullopt;
  // Carry rational points over, skipping those on the triangle sides.
  const Mat3 Ainv = inverse3(A);
  std::vector<Vec3> moved;
  for (const auto& h : hints) {
    const Vec3 x = apply(Ainv, h);
    if (x[0].is_zero_rep() || x[1].is_zero_rep() || x[2].is_zero_rep()) continue;
    moved.push_back({x[1] * x[2], x[0] * x[2], x[0] * x[1]});
  }
  std::vector<SingularPoint> gs;
  try {
    gs = singular_points(G);
  } catch (const InputError&) {
    return std::nullopt;
  }
  auto sub = parametrize_projective(G, gs, moved, depth + 1);
  if (!sub) return std::nullopt;
  const HomParam& Y = sub->X;
  HomParam back = {Y[1] * Y[2], Y[0] * Y[2], Y[0] * Y[1]};
  HomParam X;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) X[i] += Scalar(A[i][j]) * back[j];
  return Route{strip_gcd(X), "cremona"};
}

std::optional<Route> parametrize_projective(const QMPoly& Fh, const std::vector<SingularPoint>& sing,
                                            const std::vector<Vec3>& hints, int depth) {
  const int d = Fh.total_degree();
  if (d == 1) {
    // a y + b z + c w: any two points span it.
    auto unit = [](int i) {
      Monomial m;
      m.set(i, 1);
      return m;
    };
    const Rational a = Fh.coeff(unit(0)), b = Fh.coeff(unit(1)), c = Fh.coeff(unit(2));
    HomParam X;
    if (sgn(b) != 0) {
      X = {SPoly::x(), lift(QPoly(std::vector<Rational>{-c / b, -a / b})), SPoly(Scalar(1))};
    } else if (sgn(a) != 0) {
      X = {SPoly(Scalar(Rational(-c / a))), SPoly::x(), SPoly(Scalar(1))};
    } else {
      X = {SPoly::x(), SPoly(Scalar(1)), SPoly()};
    }
    return Route{strip_gcd(X), "line"};
  }
  const SMPoly S = lift(Fh);
  if (d == 2) {
    std::vector<Vec3> usable;
    for (const auto& h : hints)
      if (S.eval_all({h[0], h[1], h[2]}).is_zero_rep()) usable.push_back(h);
    return Route{pencil(S, conic_point(Fh, usable), 1), "conic"};
  }
  for (const auto& p : sing)
    if (!p.field && p.multiplicity == d - 1) return Route{pencil(S, p.coords, d - 1), "pencil"};
  if (depth >= 4) return std::nullopt;
  return via_cremona(Fh, sing, hints, depth);
}

SRatFunc ratio(const SPoly& a, const SPoly& b) { return SRatFunc(a, b); }

}  // namespace

bool degree_symmetry_check(const QMPoly& F) { return F.degree(0) == F.degree(1); }

QMPoly projective_closure(const QMPoly& F) {
  const int d = F.total_degree();
  std::vector<QMPoly::Term> ts;
  for (const auto& t : F.terms()) {
    Monomial m;
    m.set(0, t.m[0]);
    m.set(1, t.m[1]);
    m.set(2, static_cast<unsigned>(d) - t.m.deg);
    ts.push_back({m, t.c});
  }
  return QMPoly(3, std::move(ts));
}

std::vector<SingularPoint> singular_points(const QMPoly& Fh) {
  std::vector<SingularPoint> out;
  for (const auto& c : kCharts) {
    const QMPoly L = chart_poly(Fh, c);
    std::vector<QMPoly> eqs;
    for (const auto& e : {L, L.derivative(0), L.derivative(1)})
      if (!e.is_zero()) eqs.push_back(e);
    if (c.v_zero) eqs.push_back(QMPoly::variable(2, 1));
    if (c.u_zero) eqs.push_back(QMPoly::variable(2, 0));
    std::vector<AlgebraicPoint> pts;
    try {
      pts = solve_polynomial_system(eqs, 2);
    } catch (const InvariantViolation&) {
      throw InputError("the curve has a repeated component (F is not squarefree)");
    }
    for (const auto& [lp, n] : orbits(analyze_all(L, std::move(pts)))) {
      SingularPoint sp;
      sp.field = lp.field;
      sp.multiplicity = lp.multiplicity;
      sp.ordinary = lp.ordinary;
      sp.conjugates = n;
      sp.coords[static_cast<std::size_t>(c.fixed)] = Scalar(1);
      sp.coords[static_cast<std::size_t>(c.u)] = lp.a;
      sp.coords[static_cast<std::size_t>(c.v)] = lp.b;
      out.push_back(sp);
    }
  }
  return out;
}

GenusResult genus(const QMPoly& F) {
  if (F.is_constant()) throw InputError("constant polynomial has no curve");
  GenusResult g;
  g.degree = F.total_degree();
  g.singular = singular_points(projective_closure(F));
  int delta = 0;
  for (const auto& p : g.singular) {
    delta += p.conjugates * p.multiplicity * (p.multiplicity - 1) / 2;
    if (!p.ordinary) {
      g.supported = false;
      g.reason = "non-ordinary singularity";
    }
  }
  g.genus = (g.degree - 1) * (g.degree - 2) / 2 - delta;
  if (g.supported && g.genus < 0) throw InputError("the curve is reducible (negative genus)");
  return g;
}

std::optional<Parametrization> parametrize(const QMPoly& F, const GenusResult& g) {
  const QMPoly Fh = projective_closure(F);
  std::vector<Vec3> hints = affine_rational_points(F, 12, 8);
  auto route = parametrize_projective(Fh, g.singular, hints, 0);
  if (!route) return std::nullopt;
  HomParam X = canonicalize(route->X);
  if (X[2].is_zero()) return std::nullopt;
  Parametrization P{ratio(X[0], X[2]), ratio(X[1], X[2]), route->source, field_of(X)};
  if (!verify_parametrization(F, P)) throw InvariantViolation("native parametrization failed verification");
  return P;
}

std::optional<Parametrization> parametrize(const QMPoly& F) { return parametrize(F, genus(F)); }

bool verify_parametrization(const QMPoly& F, const Parametrization& P) {
  const int dy = F.degree(0), dz = F.degree(1);
  if (P.p1.degree() != dz || P.p2.degree() != dy) return false;
  // sum c n1^a d1^(dy-a) n2^b d2^(dz-b) must vanish.
  std::vector<SPoly> n1{SPoly(Scalar(1))}, d1{SPoly(Scalar(1))}, n2{SPoly(Scalar(1))}, d2{SPoly(Scalar(1))};
  for (int i = 1; i <= std::max(dy, 0); ++i) {
    n1.push_back(n1.back() * P.p1.num());
    d1.push_back(d1.back() * P.p1.den());
  }
  for (int i = 1; i <= std::max(dz, 0); ++i) {
    n2.push_back(n2.back() * P.p2.num());
    d2.push_back(d2.back() * P.p2.den());
  }
  SPoly acc;
  for (const auto& t : F.terms()) {
    const std::size_t a = t.m[0], b = t.m[1];
    acc += Scalar(t.c) * (n1[a] * d1[static_cast<std::size_t>(dy) - a] * n2[b] * d2[static_cast<std::size_t>(dz) - b]);
  }
  return acc.is_zero();
}

Parametrization imported(const QRatFunc& p1, const QRatFunc& p2) {
  return {to_scalar(p1), to_scalar(p2), "import", nullptr};
}

QRatFunc to_rational(const SRatFunc& r) {
  if (!all_rational(r.num()) || !all_rational(r.den()))
    throw InvariantViolation("rational function has irrational coefficients");
  return QRatFunc(rational_poly(r.num()), rational_poly(r.den()));
}

SRatFunc to_scalar(const QRatFunc& r) { return SRatFunc(lift(r.num()), lift(r.den())); }

}  // namespace aode
