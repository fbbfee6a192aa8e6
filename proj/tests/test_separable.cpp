#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aode/separable.hpp"
#include "test_util.hpp"

using namespace aode;
using aode::testing::planted;
using aode::testing::random_qpoly;
using aode::testing::rat;
using aode::testing::uniform;

namespace {

QPoly qp(std::vector<Rational> c) { return QPoly(std::move(c)); }

QRatFunc rf(const QPoly& n, const QPoly& d) { return QRatFunc(n, d); }

bool contains_rational(const CandidateSet& s, const Rational& v) {
  for (const auto& c : s.values)
    if (c.value.is_rational() && c.value.rational_value() == v) return true;
  return false;
}

// c0 satisfies the defining condition: P1 - c0 P2 and Q1 - c0 Q2 share a root.
bool has_common_root(const SeparableEq& eq, const Rational& c0) {
  QPoly f = eq.P1 - c0 * eq.P2, g = eq.Q1 - c0 * eq.Q2;
  if (f.is_zero() && g.is_zero()) return true;
  return gcd(f, g).degree() > 0;
}

// Value of tildeP(A, B) / tildeQ-style ratio at one point, used to read off c.
Rational hom_eval(const QPoly& P, int n, const Rational& a, const Rational& b) {
  Rational r = 0, bp = 1;
  std::vector<Rational> bpow(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    bpow[static_cast<std::size_t>(k)] = bp;
    bp *= b;
  }
  Rational ap = 1;
  for (int k = 0; k <= n; ++k) {
    r += P[k] * ap * bpow[static_cast<std::size_t>(n - k)];
    ap *= a;
  }
  return r;
}

}  // namespace

TEST_CASE("from_parametrization examples") {
  // Paper parametrization of the worked example.
  QRatFunc p1 = rf(qp({4, -12, 9}), qp({0, 12}));
  QRatFunc p2 = rf(qp({4, 36, 9}), qp({48, 12}));
  SeparableEq eq = from_parametrization(p1, p2);
  CHECK(eq.P1 == qp({4, -12, 9}));
  CHECK(eq.Q1 == qp({0, 1}));
  CHECK(eq.P2 == qp({4, 36, 9}));
  CHECK(eq.Q2 == qp({4, 1}));
  CHECK(eq.n == 2);

  SeparableEq lin = from_parametrization(rf(qp({0, 1}), qp({1})), rf(qp({1, 1}), qp({1})));
  CHECK(lin.P1 == qp({0, 1}));
  CHECK(lin.Q1 == qp({1}));
  CHECK(lin.P2 == qp({1, 1}));
  CHECK(lin.Q2 == qp({1}));

  SeparableEq inv = from_parametrization(rf(qp({1}), qp({0, 1})), rf(qp({1}), qp({1, 1})));
  CHECK(inv.P1 == qp({1}));
  CHECK(inv.Q1 == qp({0, 1}));
  CHECK(inv.P2 == qp({1}));
  CHECK(inv.Q2 == qp({1, 1}));

  CHECK_THROWS_AS(from_parametrization(p1, rf(qp({0, 1}), qp({1}))), InputError);
}

TEST_CASE("make_separable rejects invalid data") {
  CHECK_THROWS_AS(make_separable(qp({-1, 0, 1}), qp({-1, 1}), qp({0, 0, 1}), qp({1})), InputError);
  CHECK_THROWS_AS(make_separable(qp({1}), qp({2}), qp({3}), qp({1})), InputError);
  CHECK_THROWS_AS(make_separable(qp({0, 1}), qp({1}), qp({0, 0, 1}), qp({1})), InputError);
}

TEST_CASE("homogenize_pair") {
  SeparableEq eq = make_separable(qp({1, 1}), qp({0, 0, 1}), qp({4, -12, 9}), qp({0, 1}));
  HomogeneousPair h = homogenize_pair(eq);
  QMPoly z = QMPoly::variable(2, 0), w = QMPoly::variable(2, 1);
  CHECK(h.P1 == z * w + w * w);
  CHECK(h.P2 == Rational(9) * z * z - Rational(12) * z * w + Rational(4) * w * w);
  CHECK(h.Q1 == z * z);
  CHECK(h.Q2 == z * w);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(uniform(rng, 1, 5));
    QPoly P = random_qpoly(rng, static_cast<int>(uniform(rng, 0, n)));
    QMPoly H = homogenize(P, n, 2, 0, 1);
    CHECK(H.is_homogeneous());
    CHECK(H.total_degree() == n);
    CHECK(H.eval(1, Rational(1)).to_uni(0) == P);
  }
}

TEST_CASE("homogenized sides are coprime") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    auto p = planted(rng, static_cast<int>(uniform(rng, 1, 3)));
    SeparableEq eq = make_separable(p.sys.P1, p.sys.Q1, p.sys.P2, p.sys.Q2);
    HomogeneousPair h = homogenize_pair(eq);
    CHECK(gcd(h.P1, h.Q1).is_constant());
    CHECK(gcd(h.P2, h.Q2).is_constant());
  }
}

TEST_CASE("equal_sides") {
  CHECK(equal_sides(make_separable(qp({0, 0, 1}), qp({1}), qp({0, 0, 1}), qp({1}))));
  CHECK_FALSE(equal_sides(make_separable(qp({4, -12, 9}), qp({0, 1}), qp({4, 36, 9}), qp({4, 1}))));
  CHECK(equal_sides(make_separable(qp({0, 2}), qp({2}), qp({0, 1}), qp({1}))));
}

TEST_CASE("constant candidates of the worked example") {
  for (const auto& eq : {make_separable(qp({4, -12, 9}), qp({0, 1}), qp({4, 36, 9}), qp({4, 1})),
                         make_separable(qp({1, -12, 36}), qp({0, 1}), qp({1, 36, 36}), qp({1, 1}))}) {
    CandidateSet C = constant_candidates(eq);
    REQUIRE(C.finite);
    REQUIRE(C.values.size() == 4);
    CHECK(contains_rational(C, 0));
    CHECK(contains_rational(C, 1));
    int irrational = 0;
    std::vector<Rational> signs;
    for (const auto& c : C.values) {
      if (c.value.is_rational()) continue;
      ++irrational;
      REQUIRE(c.value.field()->radicand == 3);
      CHECK(c.value.rep()[0] == 7);
      signs.push_back(c.value.rep()[1]);
      CHECK(minimal_polynomial(c.value) == qp({1, -14, 1}));
    }
    CHECK(irrational == 2);
    REQUIRE(signs.size() == 2);
    CHECK(signs[0] == -signs[1]);
    CHECK(abs(signs[0]) == 4);
  }
}

TEST_CASE("candidate rules by hand") {
  // P1 = z, Q1 = 1, P2 = z + 1, Q2 = 1: heads agree (ratio 1), Q tails agree.
  CandidateSet C = constant_candidates(make_separable(qp({0, 1}), qp({1}), qp({1, 1}), qp({1})));
  REQUIRE(C.finite);
  CHECK(contains_rational(C, 1));
  CHECK(contains_rational(C, 0));
  for (const auto& c : C.values) {
    REQUIRE(c.value.is_rational());
    if (c.value.rational_value() == 1) CHECK((c.rules & 2u) != 0);
  }
  CHECK_FALSE(constant_candidates(make_separable(qp({0, 0, 1}), qp({1}), qp({0, 0, 1}), qp({1}))).finite);
}

TEST_CASE("planted common points are recovered") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(uniform(rng, 1, 3));
    const Rational alpha = uniform(rng, -5, 5);
    Rational c0 = rat(uniform(rng, -6, 6), uniform(rng, 1, 3));
    if (sgn(c0) == 0) c0 = 2;
    QPoly P2 = random_qpoly(rng, n), Q2 = random_qpoly(rng, static_cast<int>(uniform(rng, 0, n)));
    if (gcd(P2, Q2).degree() > 0) continue;
    const QPoly lin = qp({-alpha, 1});
    QPoly P1 = c0 * P2 + lin * random_qpoly(rng, n - 1), Q1 = c0 * Q2 + lin * random_qpoly(rng, n - 1);
    if (gcd(P1, Q1).degree() > 0 || std::max(P1.degree(), Q1.degree()) != n) continue;
    SeparableEq eq = make_separable(P1, Q1, P2, Q2);
    if (equal_sides(eq)) continue;
    CandidateSet C = constant_candidates(eq);
    REQUIRE(C.finite);
    CHECK(contains_rational(C, c0));
    // Every rational candidate from the common-point rule has a witness.
    for (const auto& c : C.values)
      if ((c.rules & 1u) && c.value.is_rational()) CHECK(has_common_root(eq, c.value.rational_value()));
  }
}

TEST_CASE("the constant of a planted solution is a candidate") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(uniform(rng, 1, 3));
    Rational c0 = rat(uniform(rng, 1, 7), uniform(rng, 1, 3));
    auto p = planted(rng, n, c0);
    SeparableEq eq = make_separable(p.sys.P1, p.sys.Q1, p.sys.P2, p.sys.Q2);
    // Read c off the solution at a point where the right-hand side is nonzero.
    Rational c;
    for (long x = 0;; ++x) {
      Rational a0 = p.A.eval(Rational(x)), b0 = p.B.eval(Rational(x));
      Rational a1 = p.A.eval(Rational(x + 1)), b1 = p.B.eval(Rational(x + 1));
      Rational rhs = hom_eval(eq.P2, n, a0, b0);
      if (sgn(rhs) == 0) continue;
      c = hom_eval(eq.P1, n, a1, b1) / rhs;
      break;
    }
    CHECK(c == c0);
    CandidateSet C = constant_candidates(eq);
    if (equal_sides(eq)) {
      CHECK_FALSE(C.finite);
      continue;
    }
    CHECK(contains_rational(C, c));
  }
}

TEST_CASE("build_system and the constants-only answer") {
  SeparableEq eq = make_separable(qp({4, -12, 9}), qp({0, 1}), qp({4, 36, 9}), qp({4, 1}));
  DifferenceSystem s = build_system(eq, Scalar(1));
  CHECK(s.n == 2);
  ProlongedIdeal I = prolonged_ideal(s);
  CHECK(I.generators.size() == 4);
  for (const auto& g : I.generators) CHECK(g.is_homogeneous());
  FieldPtr f = make_quadratic_field(3);
  Scalar c = Scalar(7) + Scalar(4) * Scalar::theta(f);
  ProlongedIdeal J = prolonged_ideal(build_system(eq, c));
  CHECK(J.field == f);
  CHECK_THROWS_AS(build_system(eq, Scalar(0)), InputError);

  SeparableEq same = make_separable(qp({0, 0, 1}), qp({1}), qp({0, 0, 1}), qp({1}));
  ConstantsOnly k = constants_only_answer(same);
  CHECK(k.all_constants);
  CHECK(k.N == 0);
  CHECK(constants_only_answer(make_separable(qp({0, 1}), qp({1}), qp({0, 1}), qp({1}))).all_constants);
  CHECK_THROWS_AS(constants_only_answer(eq), InvariantViolation);
}
