#include "aode/harness.hpp"

#include <random>

#include "aode/parse.hpp"
#include "aode/polyalg.hpp"

namespace aode {

QMPoly implicitize(const QRatFunc& u) {
  if (u.is_constant()) throw InputError("cannot implicitize a constant");
  const QRatFunc u1 = u.shift(Rational(1));
  const QMPoly y = QMPoly::variable(3, 0), z = QMPoly::variable(3, 1);
  const QMPoly a = y * QMPoly::from_uni(3, 2, u.den()) - QMPoly::from_uni(3, 2, u.num());
  const QMPoly b = z * QMPoly::from_uni(3, 2, u1.den()) - QMPoly::from_uni(3, 2, u1.num());
  QMPoly R = resultant(a, b, 2).with_nvars(2);
  if (R.is_zero()) throw InvariantViolation("implicitization resultant vanished");
  R = exact_divide(R, content_in(R, 1));  // factors in y alone
  if (R.depends_on(0)) R = exact_divide(R, content_in(R, 0));
  R = squarefree_part(R);
  Integer l = 1, g = 0;
  for (const auto& t : R.terms()) l = lcm(l, Integer(t.c.get_den()));
  for (const auto& t : R.terms()) {
    const Rational v = t.c * l;
    g = gcd(g, Integer(v.get_num()));
  }
  Rational s(l, g);
  // Sign: the top y term of the highest z power is positive.
  const int dz = R.degree(1);
  int dy = -1;
  Rational top;
  for (const auto& t : R.terms())
    if (t.m[1] == dz && t.m[0] > dy) dy = t.m[0], top = t.c;
  if (sgn(top) < 0) s = -s;
  return s * R;
}

QRatFunc random_planted(std::uint64_t seed, int max_degree) {
  if (max_degree < 1) throw InputError("generator degree must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_degree);
  auto draw = [&](int d) {
    std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = coef(rng);
    return QPoly(std::move(c));
  };
  for (;;) {
    const QPoly n = draw(deg(rng)), d = draw(deg(rng));
    if (n.is_zero() || d.is_zero()) continue;
    if (gcd(n, d).degree() > 0) continue;
    QRatFunc u(n, d);
    if (!u.is_constant()) return u;
  }
}

HarnessInstance harness_instance(std::uint64_t seed, int max_degree) {
  HarnessInstance h;
  h.seed = seed;
  h.planted = random_planted(seed, max_degree);
  h.F = implicitize(h.planted);
  return h;
}

std::string format_harness(const HarnessInstance& h) {
  return "# seed " + std::to_string(h.seed) + "\n# planted u(x) = " + format_ratfunc(h.planted, "x") + "\n" +
         format_instance(h.F);
}

}  // namespace aode
