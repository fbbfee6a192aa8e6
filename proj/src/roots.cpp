#include "aode/roots.hpp"

#include <algorithm>
#include <functional>

namespace aode {

namespace {

int sign_at(const QPoly& p, const Rational& x) { return sgn(p.eval(x)); }

struct Sturm {
  std::vector<QPoly> seq;

  explicit Sturm(const QPoly& p) {
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
      QPoly r = seq[seq.size() - 2] % seq.back();
      if (r.is_zero()) break;
      seq.push_back(-primitive_integer(r));
      // primitive_integer makes lc positive; restore the sign of -r.
      if (sgn(r.lc()) < 0) seq.back() = -seq.back();
    }
  }

  int variations(const Rational& x) const {
    int v = 0, last = 0;
    for (const auto& q : seq) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }
};

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p, const Rational& width) {
  std::vector<std::pair<Rational, Rational>> out;
  if (p.degree() <= 0) return out;
  QPoly q = primitive_integer(squarefree_part(p));
  Rational bound = 0;
  for (int i = 0; i < q.degree(); ++i) bound = std::max(bound, Rational(abs(q[i] / q.lc())));
  bound += 1;
  Sturm st(q);
  // Roots in the half-open interval (lo, hi].
  std::function<void(const Rational&, const Rational&, int, int)> rec =
      [&](const Rational& lo, const Rational& hi, int vlo, int vhi) {
        const int count = vlo - vhi;
        if (count <= 0) return;
        if (count == 1 && hi - lo <= width) {
          out.emplace_back(lo, hi);
          return;
        }
        Rational mid = (lo + hi) / 2;
        int vmid = st.variations(mid);
        rec(lo, mid, vlo, vmid);
        rec(mid, hi, vmid, vhi);
      };
  rec(-bound, bound, st.variations(-bound), st.variations(bound));
  return out;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational a = 1 / (hi - fl), b = 1 / (lo - fl);
  return Rational(fl) + 1 / simplest_between(a, b);
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> out;
  if (p.degree() <= 0) return out;
  QPoly q = primitive_integer(squarefree_part(p));
  if (q.degree() == 1) return {-q[0] / q[1]};
  // Distinct roots with denominators dividing lc are at least 1/lc^2 apart.
  const Integer lc = Integer(q.lc());
  const Rational width(1, lc * lc * 2);
  for (auto& [lo, hi] : isolate_real_roots(q, width)) {
    Rational cand = simplest_between(lo, hi);
    if (sgn(q.eval(cand)) == 0) out.push_back(cand);
  }
  // A closed interval around an irrational root can end at a rational root.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> nonneg_integer_roots(const QPoly& p) {
  std::vector<long> out;
  for (const auto& r : rational_roots(p)) {
    if (r.get_den() != 1 || sgn(r) < 0) continue;
    if (!r.get_num().fits_slong_p()) throw InvariantViolation("integer root out of range");
    out.push_back(r.get_num().get_si());
  }
  return out;
}

std::vector<AlgebraicRoot> algebraic_roots(const QPoly& p) {
  std::vector<AlgebraicRoot> out;
  if (p.degree() <= 0) return out;
  QPoly rest = squarefree_part(p);
  for (const auto& r : rational_roots(rest)) {
    QPoly lin(std::vector<Rational>{-r, Rational(1)});
    rest = exact_quotient(rest, lin);
    out.push_back({Scalar(r), lin});
  }
  if (rest.degree() == 2) {
    // rest = x^2 + b x + c with roots (-b +- s sqrt(r)) / 2 where b^2 - 4c = s^2 r.
    const Rational b = rest[1], c = rest[0];
    Rational s;
    Integer rad;
    square_split(b * b - 4 * c, s, rad);
    FieldPtr f = make_quadratic_field(rad);
    Scalar th = Scalar::theta(f);
    Scalar half_s(s / 2);
    Scalar base(-b / 2);
    out.push_back({base + half_s * th, rest});
    out.push_back({base - half_s * th, rest});
  } else if (rest.degree() >= 3) {
    FieldPtr f = make_field(rest);
    out.push_back({Scalar::theta(f), rest});
  }
  return out;
}

}  // namespace aode
