#include "aode/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "aode/parse.hpp"
#include "aode/polyalg.hpp"
#include "aode/zerodim.hpp"

namespace aode {

namespace {

using SPoly = UniPoly<Scalar>;

// Sum over the terms of F of c * N1^a D1^(dy-a) N2^b D2^(dz-b).
template <class P, class K>
P cleared_numerator(const QMPoly& F, const P& n1, const P& d1, const P& n2, const P& d2, const P& one) {
  const int dy = F.degree(0), dz = F.degree(1);
  auto powers = [&](const P& p, int k) {
    std::vector<P> v{one};
    for (int i = 0; i < k; ++i) v.push_back(v.back() * p);
    return v;
  };
  const auto N1 = powers(n1, dy), D1 = powers(d1, dy), N2 = powers(n2, dz), D2 = powers(d2, dz);
  P acc = one - one;
  for (const auto& t : F.terms()) {
    const std::size_t a = t.m[0], b = t.m[1];
    acc += K(t.c) * (N1[a] * D1[static_cast<std::size_t>(dy) - a] * N2[b] * D2[static_cast<std::size_t>(dz) - b]);
  }
  return acc;
}

// Variable layout of one ansatz system: s, a_0..a_da, b_0..b_(db-1),
// optionally theta, then x (dropped before solving).
struct Layout {
  int da = 0, db = 0;
  bool theta = false;
  int s() const { return 0; }
  int a(int i) const { return 1 + i; }
  int b(int i) const { return 2 + da + i; }
  int th() const { return 2 + da + db; }
  int x() const { return th() + (theta ? 1 : 0); }
  int nvars() const { return x() + 1; }
};

QMPoly var(const Layout& L, int i) { return QMPoly::variable(L.nvars(), i); }

QMPoly poly_A(const Layout& L) {
  QMPoly A(L.nvars());
  for (int i = 0; i <= L.da; ++i) A += var(L, L.a(i)) * QMPoly::variable(L.nvars(), L.x(), static_cast<unsigned>(i));
  return A;
}

QMPoly poly_B(const Layout& L) {
  QMPoly B = QMPoly::variable(L.nvars(), L.x(), static_cast<unsigned>(L.db));
  for (int i = 0; i < L.db; ++i) B += var(L, L.b(i)) * QMPoly::variable(L.nvars(), L.x(), static_cast<unsigned>(i));
  return B;
}

QMPoly shift_x(const QMPoly& p, const Layout& L) {
  std::vector<QMPoly> img;
  for (int i = 0; i < L.nvars(); ++i) img.push_back(var(L, i));
  img[static_cast<std::size_t>(L.x())] += QMPoly::constant(L.nvars(), Rational(1));
  return p.substitute(img);
}

// Normalization and coprimality, shared by both searches.
void add_side_conditions(const Layout& L, const QMPoly& A, const QMPoly& B, std::vector<QMPoly>& eqs) {
  const int n = L.nvars() - 1;
  eqs.push_back(var(L, L.db >= 1 ? L.b(L.db - 1) : L.a(L.da - 1)).with_nvars(n));
  QMPoly guard = var(L, L.s()) * var(L, L.a(L.da));
  if (L.db >= 1) guard *= resultant(A, B, L.x());
  eqs.push_back((guard - QMPoly::constant(L.nvars(), Rational(1))).with_nvars(n));
}

// Coefficients in x of E, as equations in the remaining variables.
void add_coefficients(const Layout& L, const QMPoly& E, std::vector<QMPoly>& eqs) {
  for (const auto& c : E.coeffs_in(L.x()))
    if (!c.is_zero()) eqs.push_back(c.with_nvars(L.nvars() - 1));
}

SRatFunc read_solution(const Layout& L, const AlgebraicPoint& p) {
  auto value = [&](int i) { return p.values[static_cast<std::size_t>(i)]; };
  std::vector<Scalar> a, b;
  for (int i = 0; i <= L.da; ++i) a.push_back(value(L.a(i)));
  for (int i = 0; i < L.db; ++i) b.push_back(value(L.b(i)));
  b.emplace_back(1);
  return SRatFunc(SPoly(a), SPoly(b));
}

std::vector<SRatFunc> solve_layout(const Layout& L, std::vector<QMPoly> eqs) {
  std::vector<SRatFunc> out;
  for (const auto& p : solve_polynomial_system(eqs, L.nvars() - 1)) out.push_back(read_solution(L, p));
  return out;
}

QMPoly hom(const QPoly& P, int n, const QMPoly& U, const QMPoly& V) {
  const int nv = U.nvars();
  std::vector<QMPoly> up{QMPoly::constant(nv, Rational(1))}, vp{QMPoly::constant(nv, Rational(1))};
  for (int i = 0; i < n; ++i) {
    up.push_back(up.back() * U);
    vp.push_back(vp.back() * V);
  }
  QMPoly r(nv);
  for (int k = 0; k <= P.degree(); ++k)
    if (sgn(P[k]) != 0) r += P[k] * (up[static_cast<std::size_t>(k)] * vp[static_cast<std::size_t>(n - k)]);
  return r;
}

std::vector<int> admissible(const std::vector<long>& ds, int cap) {
  std::set<int> s{0};
  for (long d : ds)
    if (d >= 1 && d <= cap) s.insert(static_cast<int>(d));
  return {s.begin(), s.end()};
}

std::string key(const SRatFunc& y) { return format_ratfunc(y, "x"); }

FieldPtr field_of(const SRatFunc& y) {
  for (const auto* p : {&y.num(), &y.den()})
    for (const auto& c : p->coeffs())
      if (!c.is_rational()) return c.field();
  return nullptr;
}

// Coefficients in x of N1(x + c) D2(x) - N2(x) D1(x + c), as polynomials in c.
std::vector<SPoly> shift_conditions(const SRatFunc& y1, const SRatFunc& y2) {
  using SM = MultiPoly<Scalar>;
  const SM x = SM::variable(2, 0), c = SM::variable(2, 1);
  auto lift = [](const SPoly& p) { return SM::from_uni(2, 0, p); };
  auto shifted = [&](const SPoly& p) { return lift(p).substitute({x + c, c}); };
  const SM E = shifted(y1.num()) * lift(y2.den()) - lift(y2.num()) * shifted(y1.den());
  std::vector<SPoly> out;
  for (const auto& q : E.coeffs_in(0))
    if (!q.is_zero()) out.push_back(q.to_uni(1));
  return out;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Solved:
      return "Solved";
    case Status::Null:
      return "Null";
    case Status::ConstantsOnly:
      return "ConstantsOnly";
    case Status::UnsupportedParametrization:
      return "UnsupportedParametrization";
  }
  return "?";
}

ConstantSolutions constant_solutions(const QMPoly& F) {
  const QMPoly u = QMPoly::variable(1, 0);
  const QPoly G = F.substitute({u, u}).to_uni(0);
  ConstantSolutions out;
  if (G.is_zero()) {
    out.all = true;
  } else if (G.degree() > 0) {
    out.roots = algebraic_roots(G);
  }
  return out;
}

bool verify_solution(const QMPoly& F, const SRatFunc& y) {
  const SRatFunc y1 = y.shift(Scalar(1));
  return cleared_numerator<SPoly, Scalar>(F, y.num(), y.den(), y1.num(), y1.den(), SPoly(Scalar(1))).is_zero();
}

bool verify_solution(const QMPoly& F, const QRatFunc& y) { return verify_solution(F, to_scalar(y)); }

void check_instance(const QMPoly& F) {
  if (F.nvars() != 2) throw InputError("F must be a polynomial in y and z");
  if (F.is_constant()) throw InputError("F is constant");
  if (!F.depends_on(1)) throw InputError("F does not involve z = y(x+1)");
  if (!content_in(F, 1).is_constant()) throw InputError("F has a factor in y alone (reducible)");
  if (F.depends_on(0) && !content_in(F, 0).is_constant()) throw InputError("F has a factor in z alone (reducible)");
  if (!gcd(F, F.derivative(1)).is_constant()) throw InputError("F has a repeated factor");
}

std::vector<SRatFunc> ansatz_search(const QMPoly& F, int M) {
  if (M < 1) throw InputError("ansatz degree must be at least 1");
  std::vector<SRatFunc> out;
  std::set<std::string> seen;
  for (int db = 0; db <= M; ++db)
    for (int da = 0; da <= M; ++da) {
      if (db == 0 && da == 0) continue;
      Layout L{da, db, false};
      const QMPoly A = poly_A(L), B = poly_B(L), A1 = shift_x(A, L), B1 = shift_x(B, L);
      std::vector<QMPoly> eqs;
      add_coefficients(L, cleared_numerator<QMPoly, Rational>(F, A, B, A1, B1, QMPoly::constant(L.nvars(), Rational(1))),
                       eqs);
      add_side_conditions(L, A, B, eqs);
      for (auto& y : solve_layout(L, eqs))
        if (seen.insert(key(y)).second) out.push_back(std::move(y));
    }
  return out;
}

std::vector<SRatFunc> parameter_search(const SeparableEq& eq, const SeparableBound& bound, int max_degree) {
  std::vector<SRatFunc> out;
  std::set<std::string> seen;
  for (const auto& tr : bound.trace) {
    const auto das = admissible(tr.DA, max_degree), dbs = admissible(tr.DB, max_degree);
    for (int db : dbs)
      for (int da : das) {
        if (db == 0 && da == 0) continue;
        Layout L{da, db, !tr.c.is_rational()};
        const QMPoly A = poly_A(L), B = poly_B(L), A1 = shift_x(A, L), B1 = shift_x(B, L);
        QMPoly c = QMPoly::constant(L.nvars(), tr.c.is_rational() ? tr.c.rational_value() : Rational(0));
        std::vector<QMPoly> eqs;
        if (L.theta) {
          c = QMPoly::from_uni(L.nvars(), L.th(), tr.c.rep());
          eqs.push_back(QMPoly::from_uni(L.nvars() - 1, L.th(), tr.c.field()->modulus));
        }
        add_coefficients(L, hom(eq.P1, eq.n, A1, B1) - c * hom(eq.P2, eq.n, A, B), eqs);
        add_coefficients(L, hom(eq.Q1, eq.n, A1, B1) - c * hom(eq.Q2, eq.n, A, B), eqs);
        add_side_conditions(L, A, B, eqs);
        for (auto& w : solve_layout(L, eqs))
          if (seen.insert(key(w)).second) out.push_back(std::move(w));
      }
  }
  return out;
}

bool same_shift_family(const SRatFunc& y1, const SRatFunc& y2) {
  if (y1.num().degree() != y2.num().degree() || y1.den().degree() != y2.den().degree()) return false;
  const FieldPtr f1 = field_of(y1), f2 = field_of(y2);
  if (f1 && f2 && f1 != f2) return key(y1) == key(y2);
  SPoly g;
  for (const auto& q : shift_conditions(y1, y2)) {
    g = g.is_zero() ? q : gcd(g, q);
    if (g.degree() == 0) return false;
  }
  return true;
}

std::vector<Rational> rational_shifts(const SRatFunc& y1, const SRatFunc& y2) {
  SPoly g;
  for (const auto& q : shift_conditions(y1, y2)) g = g.is_zero() ? q : gcd(g, q);
  if (g.is_zero()) throw InvariantViolation("shift condition vanished identically");
  if (g.degree() <= 0) return {};
  std::vector<Rational> c;
  for (const auto& v : g.coeffs()) {
    if (!v.is_rational()) return {};
    c.push_back(v.rational_value());
  }
  return rational_roots(QPoly(std::move(c)));
}

int max_degree_from_env() {
  const char* s = std::getenv("AODE_MAX_DEGREE");
  if (!s || !*s) return kDefaultMaxDegree;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) throw InputError(std::string("AODE_MAX_DEGREE must be a positive integer, got '") + s + "'");
  return static_cast<int>(v);
}

SolutionReport solve_autonomous(const QMPoly& F, const SolveOptions& options) {
  check_instance(F);
  SolutionReport r;
  r.constants = constant_solutions(F);

  if (!degree_symmetry_check(F)) {
    r.reason = "degree-asymmetry";
    return r;
  }
  r.genus = genus(F);
  if (r.genus->supported && r.genus->genus != 0) {
    r.reason = "genus-nonzero";
    return r;
  }

  if (options.import) {
    Parametrization P = imported(options.import->first, options.import->second);
    if (!verify_parametrization(F, P))
      throw InputError("the imported parametrization is not a proper parametrization of F");
    r.parametrization = P;
  } else {
    r.parametrization = parametrize(F, *r.genus);
  }
  if (!r.parametrization) {
    r.status = Status::UnsupportedParametrization;
    r.reason = r.genus->supported ? "outside-native-class" : "non-ordinary-singularity";
    return r;
  }
  if (r.parametrization->field) {
    r.status = Status::UnsupportedParametrization;
    r.reason = "irrational-parametrization";
    return r;
  }

  const QRatFunc p1 = to_rational(r.parametrization->p1), p2 = to_rational(r.parametrization->p2);
  const SeparableEq eq = from_parametrization(p1, p2);
  const SeparableBound bound = separable_degree_bound(eq);
  r.candidates = bound.candidates;
  r.trace = bound.trace;
  r.bound_computed = true;
  if (bound.all_constants) {
    r.status = Status::ConstantsOnly;
    r.reason = "equal-sides";
    r.N = r.M = 0;
    return r;
  }
  r.N = bound.N;
  const int dp = p1.degree();
  r.M = r.N * dp;
  if (r.M > options.max_degree) {
    r.M = options.max_degree;
    r.capped = true;
  }
  if (options.stop_after_bound) return r;

  std::vector<SRatFunc> found;
  if (options.search == Search::Direct) {
    if (r.M >= 1) found = ansatz_search(F, r.M);
  } else if (r.M / dp >= 1) {
    // deg p1(omega) = deg p1 * deg omega for a proper parametrization.
    for (const auto& w : parameter_search(eq, bound, r.M / dp)) {
      SRatFunc y = r.parametrization->p1.compose(w);
      if (!y.is_constant()) found.push_back(std::move(y));
    }
  }
  std::set<std::string> seen;
  for (auto& y : found) {
    if (!seen.insert(key(y)).second) continue;
    SolutionEntry e{y, verify_solution(F, y), 0};
    if (!e.verified) throw InvariantViolation("a solution from the bounded search failed verification: " + key(y));
    r.solutions.push_back(std::move(e));
  }
  // Rational solutions first, then by degree.
  std::stable_sort(r.solutions.begin(), r.solutions.end(), [](const SolutionEntry& a, const SolutionEntry& b) {
    const bool ra = !field_of(a.y), rb = !field_of(b.y);
    if (ra != rb) return ra;
    return a.y.degree() < b.y.degree();
  });
  int families = 0;
  for (std::size_t i = 0; i < r.solutions.size(); ++i) {
    r.solutions[i].family = -1;
    for (std::size_t j = 0; j < i && r.solutions[i].family < 0; ++j)
      if (same_shift_family(r.solutions[j].y, r.solutions[i].y)) r.solutions[i].family = r.solutions[j].family;
    if (r.solutions[i].family < 0) r.solutions[i].family = families++;
  }
  if (r.solutions.empty()) {
    r.reason = r.capped ? "search-empty-capped" : "search-empty";
    return r;
  }
  r.status = Status::Solved;
  r.certificate = true;
  r.shift_family_note = true;
  return r;
}

}  // namespace aode
