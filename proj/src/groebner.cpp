#include "aode/groebner.hpp"

#include <algorithm>
#include <map>

namespace aode {

namespace {

// Integer-coefficient working polynomial, terms sorted descending in `ord`.
struct GTerm {
  Monomial m;
  Integer c;
};
using GPoly = std::vector<GTerm>;

struct Ring {
  Order ord;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b, ord) > 0; }
};

GPoly from_rational(const QMPoly& p, const Ring& R) {
  Integer l = 1;
  for (const auto& t : p.terms()) l = lcm(l, Integer(t.c.get_den()));
  GPoly g;
  g.reserve(p.size());
  for (const auto& t : p.terms()) g.push_back({t.m, Integer(t.c * l)});
  std::sort(g.begin(), g.end(), [&](const GTerm& a, const GTerm& b) { return R.greater(a.m, b.m); });
  return g;
}

void make_primitive(GPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    g = gcd(g, t.c);
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a * p[from:] - b * m * g, dropping cancelled terms.
GPoly combine(const GPoly& p, std::size_t from, const Integer& a, const Integer& b, const Monomial& m, const GPoly& g,
              const Ring& R) {
  GPoly r;
  r.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  Integer v;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back({p[i].m, a * p[i].c});
      ++i;
      continue;
    }
    Monomial gm = g[j].m * m;
    if (i == p.size() || R.greater(gm, p[i].m)) {
      r.push_back({gm, -b * g[j].c});
      ++j;
    } else if (R.greater(p[i].m, gm)) {
      r.push_back({p[i].m, a * p[i].c});
      ++i;
    } else {
      v = a * p[i].c - b * g[j].c;
      if (sgn(v) != 0) r.push_back({p[i].m, v});
      ++i;
      ++j;
    }
  }
  return r;
}

// Reduces p by the polynomials basis[idx] for idx in `use`. With full = false
// only the head is reduced.
// The first `frozen` terms are kept as they are (used for tail reduction).
GPoly reduce(GPoly p, const std::vector<GPoly>& basis, const std::vector<std::size_t>& use, bool full, const Ring& R,
             std::size_t frozen = 0) {
  GPoly done(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::min(frozen, p.size())));
  std::size_t pos = done.size();
  int steps = 0;
  while (pos < p.size()) {
    const GTerm& t = p[pos];
    const GPoly* div = nullptr;
    for (std::size_t k : use) {
      const GPoly& g = basis[k];
      if (g.front().m.divides(t.m)) {
        div = &g;
        break;
      }
    }
    if (!div) {
      if (!full) break;
      done.push_back(t);
      ++pos;
      continue;
    }
    const GPoly& g = *div;
    Integer l = gcd(t.c, g.front().c);
    Integer a = g.front().c / l, b = t.c / l;
    Monomial m = g.front().m.quotient_of(t.m);
    p = combine(p, pos, a, b, m, g, R);
    pos = 0;
    if (a != 1)
      for (auto& d : done) d.c *= a;
    if (++steps % 16 == 0) {
      Integer c = 0;
      for (const auto& d : done) c = gcd(c, d.c);
      for (const auto& d : p) c = gcd(c, d.c);
      if (c > 1) {
        for (auto& d : done) mpz_divexact(d.c.get_mpz_t(), d.c.get_mpz_t(), c.get_mpz_t());
        for (auto& d : p) mpz_divexact(d.c.get_mpz_t(), d.c.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  done.insert(done.end(), p.begin() + static_cast<std::ptrdiff_t>(pos), p.end());
  make_primitive(done);
  return done;
}

QMPoly to_rational(const GPoly& p, int nvars) {
  std::vector<QMPoly::Term> ts;
  ts.reserve(p.size());
  const Integer& lc = p.front().c;
  for (const auto& t : p) {
    Rational c(t.c, lc);
    c.canonicalize();
    ts.push_back({t.m, c});
  }
  return QMPoly(nvars, std::move(ts));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

GPoly spoly(const GPoly& f, const GPoly& g, const Monomial& L, const Ring& R) {
  Integer l = gcd(f.front().c, g.front().c);
  Integer a = g.front().c / l, b = f.front().c / l;
  // a * (L / lm f) * f - b * (L / lm g) * g; the heads cancel.
  GPoly fm;
  Monomial mf = f.front().m.quotient_of(L), mg = g.front().m.quotient_of(L);
  fm.reserve(f.size());
  for (const auto& t : f) fm.push_back({t.m * mf, t.c});
  GPoly r = combine(fm, 0, a, b, mg, g, R);
  return r;
}

}  // namespace

Monomial leading_monomial(const QMPoly& p, Order ord) {
  if (p.is_zero()) throw InvariantViolation("leading monomial of zero");
  Monomial best = p.terms().front().m;
  if (ord == Order::GrevLex) return best;
  for (const auto& t : p.terms())
    if (compare(t.m, best, ord) > 0) best = t.m;
  return best;
}

std::vector<QMPoly> buchberger(const std::vector<QMPoly>& gens, Order ord) {
  const Ring R{ord};
  int nvars = 0;
  for (const auto& g : gens) nvars = std::max(nvars, g.nvars());
  std::vector<GPoly> polys;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;

  auto unit = [&]() { return std::vector<QMPoly>{QMPoly::constant(nvars, Rational(1))}; };

  // Gebauer-Moeller update with the new polynomial h = polys.back().
  auto update = [&](std::size_t h) {
    const Monomial& mh = polys[h].front().m;
    std::vector<Pair> C, D;
    for (std::size_t g : active) C.push_back({h, g, lcm(mh, polys[g].front().m)});
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(mh, polys[p.j].front().m);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    for (const auto& p : pairs) {
      const bool chain = mh.divides(p.lcm) && !(lcm(polys[p.i].front().m, mh) == p.lcm) &&
                         !(lcm(polys[p.j].front().m, mh) == p.lcm);
      if (!chain) next.push_back(p);
    }
    for (const auto& p : D)
      if (!coprime(mh, polys[p.j].front().m)) next.push_back(p);
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!mh.divides(polys[g].front().m)) still.push_back(g);
    still.push_back(h);
    active = std::move(still);
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    GPoly p = from_rational(g, R);
    make_primitive(p);
    if (p.front().m.deg == 0) return unit();
    polys.push_back(std::move(p));
    update(polys.size() - 1);
  }
  if (polys.empty()) return {};

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (R.greater(pairs[best].lcm, pairs[k].lcm)) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    GPoly s = spoly(polys[p.i], polys[p.j], p.lcm, R);
    if (s.empty()) continue;
    GPoly h = reduce(std::move(s), polys, active, true, R);
    if (h.empty()) continue;
    if (h.front().m.deg == 0) return unit();
    polys.push_back(std::move(h));
    update(polys.size() - 1);
  }

  // Interreduce the minimal basis into the reduced one.
  std::vector<GPoly> basis;
  // Input generators never pass through the head-divisibility filter of
  // update(), so drop every element whose head is a multiple of another one.
  for (std::size_t a = 0; a < active.size(); ++a) {
    const Monomial& ma = polys[active[a]].front().m;
    bool redundant = false;
    for (std::size_t b = 0; b < active.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& mb = polys[active[b]].front().m;
      redundant = mb.divides(ma) && (!(mb == ma) || b < a);
    }
    if (!redundant) basis.push_back(polys[active[a]]);
  }
  std::sort(basis.begin(), basis.end(), [&](const GPoly& a, const GPoly& b) { return R.greater(b.front().m, a.front().m); });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::vector<std::size_t> others;
    for (std::size_t o = 0; o < basis.size(); ++o)
      if (o != k) others.push_back(o);
    basis[k] = reduce(basis[k], basis, others, true, R, 1);
  }
  std::vector<QMPoly> result;
  for (const auto& b : basis) result.push_back(to_rational(b, nvars));
  return result;
}

// Pending terms live in an ordered map so each reduction step costs
// O(|g| log |pending|) instead of rebuilding the remainder.
QMPoly normal_form(const QMPoly& p, const std::vector<QMPoly>& g, Order ord) {
  if (p.is_zero()) return p;
  struct Greater {
    Order ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b, ord) > 0; }
  };
  struct Divisor {
    Monomial head;
    Rational inv;  // 1 / leading coefficient
    const QMPoly* poly;
  };
  std::vector<Divisor> divs;
  for (const auto& q : g) {
    if (q.is_zero()) continue;
    Monomial h = leading_monomial(q, ord);
    divs.push_back({h, 1 / q.coeff(h), &q});
  }
  std::map<Monomial, Rational, Greater> pending(Greater{ord});
  for (const auto& t : p.terms()) pending.emplace(t.m, t.c);
  std::vector<QMPoly::Term> rest;
  while (!pending.empty()) {
    auto top = pending.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    pending.erase(top);
    const Divisor* d = nullptr;
    for (const auto& cand : divs)
      if (cand.head.divides(m)) {
        d = &cand;
        break;
      }
    if (!d) {
      rest.push_back({m, c});
      continue;
    }
    const Monomial q = d->head.quotient_of(m);
    const Rational f = c * d->inv;
    for (const auto& t : d->poly->terms()) {
      if (t.m == d->head) continue;
      auto [it, fresh] = pending.try_emplace(t.m * q, 0);
      it->second -= f * t.c;
      if (sgn(it->second) == 0) pending.erase(it);
    }
  }
  return QMPoly(p.nvars(), std::move(rest));
}

std::vector<QMPoly> eliminate(const std::vector<QMPoly>& gens, const std::vector<bool>& keep) {
  int n = 0;
  for (const auto& g : gens) n = std::max(n, g.nvars());
  // New positions: eliminated variables first, kept ones after.
  std::vector<int> map(static_cast<std::size_t>(n)), back(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i)
    if (!keep[static_cast<std::size_t>(i)]) map[static_cast<std::size_t>(i)] = next++;
  const int first_kept = next;
  for (int i = 0; i < n; ++i)
    if (keep[static_cast<std::size_t>(i)]) map[static_cast<std::size_t>(i)] = next++;
  for (int i = 0; i < n; ++i) back[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = i;
  std::vector<QMPoly> moved;
  for (const auto& g : gens) moved.push_back(g.with_nvars(n).rename(map, n));
  std::vector<QMPoly> out;
  for (const auto& g : buchberger(moved, Order::Lex)) {
    bool free = true;
    for (int v = 0; v < first_kept && free; ++v)
      if (g.depends_on(v)) free = false;
    if (free) out.push_back(g.rename(back, n));
  }
  return out;
}

bool is_zero_dimensional(const std::vector<QMPoly>& gb, Order ord, int nvars) {
  std::vector<bool> seen(static_cast<std::size_t>(nvars), false);
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    Monomial m = leading_monomial(g, ord);
    if (m.deg == 0) return true;  // unit ideal, empty variety
    int var = -1, count = 0;
    for (int i = 0; i < nvars; ++i)
      if (m[i]) {
        var = i;
        ++count;
      }
    if (count == 1) seen[static_cast<std::size_t>(var)] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace aode
