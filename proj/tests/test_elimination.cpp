#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "aode/elimination.hpp"
#include "aode/zerodim.hpp"
#include "test_util.hpp"

using namespace aode;
using aode::testing::random_mpoly;
using aode::testing::random_qpoly;
using aode::testing::uniform;
using aode::testing::Planted;
using aode::testing::planted;
using aode::testing::specialize;
using aode::testing::sylvester_det;

namespace {

QPoly qp(std::vector<Rational> c) { return QPoly(std::move(c)); }

QMPoly var(int n, int i) { return QMPoly::variable(n, i); }
QMPoly cst(int n, long c) { return QMPoly::constant(n, Rational(c)); }

QMPoly spoly(const QMPoly& f, const QMPoly& g, Order ord) {
  Monomial a = leading_monomial(f, ord), b = leading_monomial(g, ord), l = lcm(a, b);
  Rational ca = f.coeff(a), cb = g.coeff(b);
  return f.mul_term(a.quotient_of(l), 1 / ca) - g.mul_term(b.quotient_of(l), 1 / cb);
}

// Groebner criterion checked from scratch: every S-polynomial reduces to 0.
bool is_groebner(const std::vector<QMPoly>& gb, Order ord) {
  for (std::size_t i = 0; i < gb.size(); ++i)
    for (std::size_t j = i + 1; j < gb.size(); ++j)
      if (!normal_form(spoly(gb[i], gb[j], ord), gb, ord).is_zero()) return false;
  return true;
}

bool is_reduced(const std::vector<QMPoly>& gb, Order ord) {
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (gb[i].coeff(leading_monomial(gb[i], ord)) != 1) return false;
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      Monomial lm = leading_monomial(gb[j], ord);
      for (const auto& t : gb[i].terms())
        if (lm.divides(t.m)) return false;
    }
  }
  return true;
}

bool proportional(const SMPoly& a, const QMPoly& b) {
  QMPoly la = lift_theta(a, -1, b.nvars());
  if (la.is_zero() || b.is_zero()) return la.is_zero() && b.is_zero();
  return b.leading().c * la == la.leading().c * b;
}

Rational eval_on(const SMPoly& F, const QPoly& u, const Rational& x) {
  std::vector<Scalar> v = {u.eval(x), u.eval(x + 1), u.eval(x + 2)};
  Scalar r = F.eval_all(v);
  return r.rational_value();
}

}  // namespace

TEST_CASE("resultant examples") {
  // variables: z, a, b
  QMPoly z = var(3, 0), a = var(3, 1), b = var(3, 2);
  CHECK(resultant(z - a, z - b, 0) == a - b);
  QMPoly r = resultant(z * z + cst(3, 1), z * z - cst(3, 2), 0);
  CHECK(r == cst(3, 9));
  CHECK(sylvester_det(qp({1, 0, 1}), qp({-2, 0, 1})) == 9);
  CHECK(resultant((z - cst(3, 1)) * (z + a), (z - cst(3, 1)) * (z - b), 0).is_zero());
  CHECK_THROWS_AS(resultant(a, b, 0), InvariantViolation);
}

TEST_CASE("univariate resultant matches the Sylvester determinant") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    QPoly f = random_qpoly(rng, static_cast<int>(uniform(rng, 1, 5)));
    QPoly g = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 5)));
    QMPoly F = QMPoly::from_uni(1, 0, f), G = QMPoly::from_uni(1, 0, g);
    CHECK(resultant(F, G, 0).constant_term() == sylvester_det(f, g));
  }
}

TEST_CASE("resultant commutes with substitution") {
  // Example: f = zw + 1, g = z + w, eliminate w, z := 2.
  QMPoly z = var(2, 0), w = var(2, 1);
  QMPoly f = z * w + cst(2, 1), g = z + w;
  QMPoly lhs = resultant(f, g, 1).eval(0, Rational(2));
  QMPoly rhs = resultant(f.eval(0, Rational(2)), g.eval(0, Rational(2)), 1);
  CHECK(lhs == rhs);

  std::mt19937_64 rng(22);
  int done = 0;
  while (done < 200) {
    QMPoly F = random_mpoly(rng, 3, 4, 5), G = random_mpoly(rng, 3, 4, 5);
    if (F.degree(0) < 1 || G.degree(0) < 1) continue;
    std::vector<Rational> pt = {0, aode::testing::rat(uniform(rng, -6, 6), uniform(rng, 1, 3)),
                                aode::testing::rat(uniform(rng, -6, 6), uniform(rng, 1, 3))};
    QPoly fs = specialize(F, 0, pt), gs = specialize(G, 0, pt);
    if (fs.degree() != F.degree(0) || gs.degree() != G.degree(0)) continue;  // leading coefficient vanished
    ++done;
    Rational before = resultant(F, G, 0).eval(1, pt[1]).eval(2, pt[2]).constant_term();
    CHECK(before == sylvester_det(fs, gs));
  }
}

TEST_CASE("resultant is multiplicative") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    QMPoly f = random_mpoly(rng, 2, 3, 4), g = random_mpoly(rng, 2, 3, 4), h = random_mpoly(rng, 2, 3, 4);
    if (f.degree(0) < 1 || g.degree(0) < 1 || h.degree(0) < 1) continue;
    CHECK(resultant(f * g, h, 0) == resultant(f, h, 0) * resultant(g, h, 0));
  }
}

TEST_CASE("buchberger examples") {
  QMPoly x = var(2, 0), y = var(2, 1);
  auto gb = buchberger({x * x, x * y}, Order::Lex);
  REQUIRE(gb.size() == 2);
  CHECK(is_groebner(gb, Order::Lex));
  CHECK(std::find(gb.begin(), gb.end(), x * x) != gb.end());
  CHECK(std::find(gb.begin(), gb.end(), x * y) != gb.end());

  CHECK(buchberger({x - cst(2, 1)}, Order::Lex) == std::vector<QMPoly>{x - cst(2, 1)});
  auto lin = buchberger({x + y, x - y}, Order::Lex);
  REQUIRE(lin.size() == 2);
  CHECK(std::find(lin.begin(), lin.end(), x) != lin.end());
  CHECK(std::find(lin.begin(), lin.end(), y) != lin.end());
  CHECK(buchberger({x, x - cst(2, 1)}, Order::GrevLex) == std::vector<QMPoly>{cst(2, 1)});
}

TEST_CASE("random bases are reduced Groebner bases of the input ideal") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 25; ++i) {
    std::vector<QMPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(random_mpoly(rng, 3, 3, 3));
    for (Order ord : {Order::Lex, Order::GrevLex}) {
      auto gb = buchberger(gens, ord);
      CHECK(is_groebner(gb, ord));
      CHECK(is_reduced(gb, ord));
      for (const auto& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
    }
  }
}

TEST_CASE("elimination examples") {
  // variables z, w, t
  QMPoly z = var(3, 0), w = var(3, 1), t = var(3, 2);
  auto out = eliminate({z - w * w, w - t}, {true, false, true});
  CHECK(std::find(out.begin(), out.end(), z - t * t) != out.end());
  for (const auto& g : out) CHECK_FALSE(g.depends_on(1));

  auto all = eliminate({z - w * w, w - t}, {true, true, true});
  CHECK(all == buchberger({z - w * w, w - t}, Order::Lex));

  DifferenceSystem sys{qp({0, 0, 1}), qp({1}), qp({0, 0, 1}), qp({1}), 2, Scalar(1)};
  ProlongedIdeal I = prolonged_ideal(sys);
  auto fb = eliminate(I.generators, {true, true, true, false, false, false});
  QMPoly w0 = var(6, kW0), w1 = var(6, kW1);
  // The output is a lex basis of the elimination ideal, so membership is a
  // normal form computation.
  CHECK(normal_form(w1 * w1 - w0 * w0, fb, Order::Lex).is_zero());
  for (const auto& g : fb)
    for (int v = kZ0; v <= kZ2; ++v) CHECK_FALSE(g.depends_on(v));
}

TEST_CASE("homogenize round trip") {
  CHECK(homogenize(qp({1, 1}), 2, 2, 0, 1) == var(2, 0) * var(2, 1) + var(2, 1) * var(2, 1));
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    QPoly p = random_qpoly(rng, static_cast<int>(uniform(rng, 0, 4)));
    QMPoly h = homogenize(p, 4, 2, 0, 1);
    CHECK(h.is_homogeneous());
    CHECK(h.eval(1, Rational(1)).to_uni(0) == p);
  }
}

TEST_CASE("second-order equations for squaring on both sides") {
  DifferenceSystem sys{qp({0, 0, 1}), qp({1}), qp({0, 0, 1}), qp({1}), 2, Scalar(1)};
  SecondOrderPair out = derive_second_order(sys);
  REQUIRE_FALSE(out.FB.F.is_zero());
  REQUIRE_FALSE(out.FA.F.is_zero());
  CHECK(out.FB.F.is_homogeneous());
  ProlongedIdeal I = prolonged_ideal(sys);
  CHECK(in_prolonged_ideal(out.FB.F, false, I, prolonged_basis(I)));
  CHECK(in_prolonged_ideal(out.FA.F, true, I, prolonged_basis(I)));
  // B(x+1)^2 = B(x)^2 holds on the sign patterns of a constant B.
  for (auto s : {std::vector<long>{1, 1, 1}, std::vector<long>{1, -1, 1}, std::vector<long>{2, -2, -2}})
    CHECK(out.FB.F.eval_all({Scalar(s[0]), Scalar(s[1]), Scalar(s[2])}).is_zero_rep());
}

TEST_CASE("second-order equations annihilate planted solutions") {
  std::mt19937_64 rng(26);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < (n < 3 ? 3 : 1); ++i) {
      Planted p = planted(rng, n);
      SecondOrderPair out = derive_second_order(p.sys);
      REQUIRE_FALSE(out.FA.F.is_zero());
      REQUIRE_FALSE(out.FB.F.is_zero());
      for (long x = -3; x <= 6; ++x) {
        CHECK(sgn(eval_on(out.FA.F, p.A, x)) == 0);
        CHECK(sgn(eval_on(out.FB.F, p.B, x)) == 0);
      }
    }
  }
}

TEST_CASE("second-order equations over a quadratic field") {
  // Same shape as the golden separable equation, with c = 7 + 4 sqrt(3).
  FieldPtr f = make_quadratic_field(3);
  Scalar c = Scalar(7) + Scalar(4) * Scalar::theta(f);
  DifferenceSystem sys{qp({1, -12, 36}), qp({0, 1}), qp({1, 36, 36}), qp({1, 1}), 2, c};
  SecondOrderPair out = derive_second_order(sys);
  REQUIRE_FALSE(out.FA.F.is_zero());
  REQUIRE_FALSE(out.FB.F.is_zero());
  ProlongedIdeal I = prolonged_ideal(sys);
  CHECK(in_prolonged_ideal(out.FA.F, true, I, prolonged_basis(I)));
  CHECK(in_prolonged_ideal(out.FB.F, false, I, prolonged_basis(I)));
}

TEST_CASE("zero constant is rejected") {
  DifferenceSystem sys{qp({0, 1}), qp({1}), qp({1, 1}), qp({1}), 1, Scalar(0)};
  CHECK_THROWS_AS(prolonged_ideal(sys), InputError);
}

namespace {

// Number of monomials outside the leading-monomial ideal of a zero-dimensional
// lex basis; equals the number of points (with conjugates) for radical ideals.
long standard_monomials(const std::vector<QMPoly>& gb, int nvars) {
  std::vector<unsigned> bound(static_cast<std::size_t>(nvars), 0);
  std::vector<Monomial> lms;
  for (const auto& g : gb) {
    Monomial m = leading_monomial(g, Order::Lex);
    lms.push_back(m);
    for (int i = 0; i < nvars; ++i)
      if (m.deg == m[i]) bound[static_cast<std::size_t>(i)] = m[i];
  }
  long count = 0;
  Monomial cur;
  std::function<void(int)> walk = [&](int i) {
    if (i == nvars) {
      for (const auto& l : lms)
        if (l.divides(cur)) return;
      ++count;
      return;
    }
    for (unsigned e = 0; e < bound[static_cast<std::size_t>(i)]; ++e) {
      cur.set(i, e);
      walk(i + 1);
    }
    cur.set(i, 0);
  };
  walk(0);
  return count;
}

long check_points(const std::vector<QMPoly>& eqs, int nvars) {
  auto gb = buchberger(eqs, Order::Lex);
  auto pts = solve_polynomial_system(eqs, nvars);
  long weighted = 0;
  for (const auto& p : pts) {
    // Quadratic roots are listed with both conjugates; a point over a larger
    // field stands for all its conjugates (and may repeat across branches).
    weighted += (!p.field || p.field->radicand != 0) ? 1 : p.field->degree();
    for (const auto& e : eqs) {
      Scalar v(0);
      for (const auto& t : e.terms()) {
        Scalar term(t.c);
        for (int i = 0; i < nvars; ++i)
          for (unsigned k = 0; k < t.m[i]; ++k) term *= p.values[static_cast<std::size_t>(i)];
        v += term;
      }
      CHECK(v.is_zero_rep());
    }
  }
  CHECK(weighted >= standard_monomials(gb, nvars));
  return weighted;
}

}  // namespace

TEST_CASE("zero-dimensional systems") {
  QMPoly x = var(2, 0), y = var(2, 1), one = cst(2, 1);
  auto pts = solve_polynomial_system({y * y - cst(2, 2), x - y}, 2);
  REQUIRE(pts.size() == 2);
  CHECK(to_string(pts[0].values[0]) == to_string(pts[0].values[1]));
  CHECK(check_points({x * x + y * y - one, x - y}, 2) == 2);
  check_points({y * y * y - cst(2, 2), x * x - y}, 2);  // degree-6 compositum
  CHECK(check_points({x * (x - one) * (x + cst(2, 2)), y - x * x}, 2) == 3);
  check_points({x * x - cst(2, 3), y * y - cst(2, 2)}, 2);  // Q(sqrt 3, sqrt 2)
  check_points({x * x - one, y * y - x}, 2);
  CHECK(solve_polynomial_system({x - one, x - cst(2, 2)}, 2).empty());
  CHECK_THROWS_AS(solve_polynomial_system({x * y}, 2), InvariantViolation);

  std::mt19937_64 rng(27);
  for (int i = 0; i < 10; ++i) {
    // Random univariate factors in each variable make a radical zero-dimensional ideal.
    QMPoly fy = QMPoly::from_uni(2, 1, random_qpoly(rng, static_cast<int>(uniform(rng, 1, 3))));
    QMPoly fx = var(2, 0) * var(2, 0) - var(2, 1) * cst(2, uniform(rng, 1, 3)) - cst(2, uniform(rng, -3, 3));
    if (!certify_squarefree(fy)) continue;
    check_points({fx, fy}, 2);
  }
}
