#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "aode/algext.hpp"
#include "aode/multipoly.hpp"
#include "aode/ratfunc.hpp"
#include "aode/roots.hpp"
#include "test_util.hpp"

using namespace aode;
using aode::testing::random_qpoly;
using aode::testing::uniform;

namespace {

QPoly qp(std::vector<Rational> c) { return QPoly(std::move(c)); }
const QPoly X = QPoly::x();

}  // namespace

TEST_CASE("normalize cancels scalars and common factors") {
  QRatFunc r(qp({2, 2}), qp({0, 4}));
  CHECK(r.num() == qp({Rational(1, 2), Rational(1, 2)}));
  CHECK(r.den() == X);

  QRatFunc s(X * X - QPoly(Rational(1)), X - QPoly(Rational(1)));
  CHECK(s.num() == X + QPoly(Rational(1)));
  CHECK(s.den() == QPoly(Rational(1)));

  QRatFunc z(QPoly(), X);
  CHECK(z.num().is_zero());
  CHECK(z.den() == QPoly(Rational(1)));

  CHECK_THROWS_AS(QRatFunc(X, QPoly()), InputError);
}

TEST_CASE("normalize is invariant under a common scalar") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    QPoly n = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 4)));
    QPoly d = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 4)));
    Rational k = aode::testing::rat(uniform(rng, 1, 9), uniform(rng, 1, 9));
    if (uniform(rng, 0, 1)) k = -k;
    CHECK(QRatFunc(n, d) == QRatFunc(k * n, k * d));
  }
}

TEST_CASE("poly_gcd examples") {
  CHECK(gcd(X * X - QPoly(Rational(1)), X * X - qp({0, 2}) + QPoly(Rational(1))) == X - QPoly(Rational(1)));
  CHECK(gcd(X * X + QPoly(Rational(1)), X + QPoly(Rational(3))) == QPoly(Rational(1)));
  CHECK_THROWS_AS(gcd(QPoly(), QPoly()), InvariantViolation);
}

TEST_CASE("poly_gcd recovers a planted common factor") {
  std::mt19937_64 rng(12);
  int tested = 0;
  while (tested < 100) {
    QPoly f = random_qpoly(rng, static_cast<int>(uniform(rng, 1, 4)));
    QPoly g = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 4)));
    QPoly h = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 4)));
    if (gcd(g, h).degree() != 0) continue;  // the oracle needs coprime cofactors
    ++tested;
    QPoly got = gcd(f * g, f * h);
    CHECK(got == f.monic());
    // gcd divides both and leaves coprime cofactors.
    CHECK(((f * g) % got).is_zero());
    CHECK(gcd(exact_quotient(f * g, got), exact_quotient(f * h, got)).degree() == 0);
  }
}

TEST_CASE("shift examples and properties") {
  CHECK((X * X).shift(Rational(1)) == qp({1, 2, 1}));
  const Rational c(3, 7);
  QRatFunc w(QPoly(Rational(1)), X + QPoly(c));
  QRatFunc expected(QPoly(Rational(1)), X + QPoly(c + 1));
  CHECK(w.shift(Rational(1)) == expected);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    QPoly p = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 6)));
    QPoly q = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 6)));
    const Rational k = uniform(rng, -3, 3);
    CHECK(p.shift(Rational(1)).shift(Rational(-1)) == p);
    CHECK((p * q).shift(k) == p.shift(k) * q.shift(k));
    CHECK((p + q).shift(k) == p.shift(k) + q.shift(k));
  }
}

TEST_CASE("extension arithmetic without zero divisors") {
  FieldPtr f = make_quadratic_field(3);
  CHECK(f->irreducible);
  Scalar a = Scalar::theta(f) - Scalar(1);
  Scalar inv = a.inverse();
  CHECK(a * inv == Scalar(1));
  Scalar s = Scalar::theta(f);
  CHECK(s * s == Scalar(3));
  CHECK(minimal_polynomial(Scalar(7) + Scalar(4) * s) == qp({1, -14, 1}));
}

TEST_CASE("inverting a factor of the modulus splits the field") {
  FieldPtr f = make_field(qp({2, -3, 1}));  // (c-1)(c-2)
  CHECK_FALSE(f->irreducible);
  Scalar e = Scalar::theta(f) - Scalar(1);
  try {
    (void)e.inverse();
    FAIL("expected a split");
  } catch (const SplitRequest& s) {
    CHECK(s.factor == qp({-1, 1}));
    auto [m1, m2] = split_maps(s);
    CHECK(m1(Scalar::theta(f)) == Scalar(1));
    CHECK(m2(Scalar::theta(f)) == Scalar(2));
    // After the split the element is zero in one branch and a unit in the other.
    CHECK(m1(e).is_zero_rep());
    CHECK(m2(e) == Scalar(1));
  }
}

TEST_CASE("random product of coprime quadratics splits into its factors") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 50; ++i) {
    QPoly q1 = qp({uniform(rng, -9, 9), uniform(rng, -9, 9), 1});
    QPoly q2 = qp({uniform(rng, -9, 9), uniform(rng, -9, 9), 1});
    if (!is_squarefree(q1 * q2)) continue;
    FieldPtr f = make_field(q1 * q2);
    Scalar e(f, q1);
    try {
      (void)e.inverse();
      FAIL("expected a split");
    } catch (const SplitRequest& s) {
      QPoly other = exact_quotient(f->modulus, s.factor);
      const bool same = (s.factor == q1.monic() && other == q2.monic()) || (s.factor == q2.monic() && other == q1.monic());
      CHECK(same);
    }
  }
}

TEST_CASE("extension arithmetic agrees with numeric evaluation to 50 digits") {
  using Float = boost::multiprecision::cpp_bin_float_100;
  // Modulus with four real roots; values are cross-checked at each of them.
  const QPoly m = qp({6, 0, -5, 0, 1});  // (c^2 - 2)(c^2 - 3)
  FieldPtr f = make_field(m);
  auto roots = isolate_real_roots(m, Rational(1, mpz_class("1000000000000000000000000000000000000000000000000000000000000")));
  REQUIRE(roots.size() == 4);
  auto to_float = [](const Rational& q) { return Float(q.get_num().get_str()) / Float(q.get_den().get_str()); };
  auto eval_at = [&](const Scalar& s, const Float& x) {
    Float acc = 0;
    const auto& c = s.rep().coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + to_float(c[i]);
    return acc;
  };
  std::mt19937_64 rng(15);
  const Float tol("1e-50");
  for (int trial = 0; trial < 20; ++trial) {
    Scalar a(f, random_qpoly(rng, 3)), b(f, random_qpoly(rng, 3));
    Scalar s = a * b + a;
    Scalar q;
    bool split = false;
    try {
      q = s / b;
    } catch (const SplitRequest&) {
      split = true;
    }
    for (auto& [lo, hi] : roots) {
      Float x = (to_float(lo) + to_float(hi)) / 2;
      Float fa = eval_at(a, x), fb = eval_at(b, x);
      CHECK(abs(eval_at(s, x) - (fa * fb + fa)) < tol);
      if (!split) CHECK(abs(eval_at(q, x) - (fa * fb + fa) / fb) < tol * (1 + abs((fa * fb + fa) / fb)));
    }
  }
}

TEST_CASE("rational and integer roots") {
  CHECK(rational_roots(qp({-6, 11, -6, 1})) == std::vector<Rational>{1, 2, 3});
  CHECK(rational_roots(qp({-1, 0, 4})) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(rational_roots(qp({-2, 0, 1})).empty());
  CHECK(nonneg_integer_roots(qp({0, 6, -5, 1})) == std::vector<long>{0, 2, 3});
  CHECK(nonneg_integer_roots(qp({4, 0, -1})) == std::vector<long>{2});
  std::mt19937_64 rng(16);
  for (int i = 0; i < 50; ++i) {
    Rational r = aode::testing::rat(uniform(rng, -20, 20), uniform(rng, 1, 12));
    QPoly p = qp({-r, 1}) * random_qpoly(rng, 3);
    auto roots = rational_roots(p);
    CHECK(std::find(roots.begin(), roots.end(), r) != roots.end());
    for (const auto& x : roots) CHECK(sgn(p.eval(x)) == 0);
    CHECK(std::adjacent_find(roots.begin(), roots.end(), std::greater_equal<Rational>()) == roots.end());
  }
  // An irrational root near 0.0143 whose isolating interval ends at the root 0.
  const QPoly near = qp({0, 0, 3, -210, 12});
  CHECK(rational_roots(near) == std::vector<Rational>{0});
  CHECK(algebraic_roots(near).size() == 3);
}

TEST_CASE("algebraic roots of a quadratic are written with square roots") {
  auto rs = algebraic_roots(qp({1, -14, 1}));
  REQUIRE(rs.size() == 2);
  CHECK(to_string(rs[0].value) == "7 + 4*sqrt(3)");
  CHECK(to_string(rs[1].value) == "7 - 4*sqrt(3)");
  CHECK(rs[0].value.field() == rs[1].value.field());
  auto mixed = algebraic_roots(qp({-1, 1}) * qp({-2, 0, 0, 1}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].value == Scalar(1));
  CHECK(mixed[1].value.field()->degree() == 3);
  CHECK(mixed[1].value.field()->irreducible);
}

TEST_CASE("multivariate arithmetic and exact division") {
  using P = MultiPoly<Rational>;
  P x = P::variable(3, 0), y = P::variable(3, 1), z = P::variable(3, 2);
  P a = x * y + P::constant(3, 1), b = x * x - y;
  CHECK(exact_divide(a * b, a) == b);
  CHECK(exact_divide(a * b, b) == a);
  CHECK_THROWS_AS(exact_divide(a * b + z, a), InvariantViolation);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(pow(x + y, 3).size() == 4);
  CHECK((x * x * z).eval(0, Rational(2)) == Rational(4) * z);
  CHECK((x * y + z).substitute({y, x, x}) == x * y + x);
}
