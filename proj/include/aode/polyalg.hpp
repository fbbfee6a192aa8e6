#pragma once

#include <vector>

#include "aode/multipoly.hpp"

namespace aode {

namespace detail {

template <class K>
using Dense = std::vector<MultiPoly<K>>;  // coefficients in the main variable, low to high

template <class K>
void trim(Dense<K>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class K>
int deg(const Dense<K>& a) {
  return static_cast<int>(a.size()) - 1;
}

// lc(b)^(deg a - deg b + 1) * a reduced modulo b.
template <class K>
Dense<K> prem(Dense<K> r, const Dense<K>& b) {
  const int db = deg(b);
  int e = deg(r) - db + 1;
  const MultiPoly<K>& lb = b.back();
  while (deg(r) >= db && !r.empty()) {
    MultiPoly<K> t = r.back();
    const int shift = deg(r) - db;
    for (auto& c : r) c = c * lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(shift + j)] -= t * b[static_cast<std::size_t>(j)];
    trim(r);
    --e;
  }
  if (e > 0 && !r.empty()) {
    MultiPoly<K> f = pow(lb, static_cast<unsigned>(e));
    for (auto& c : r) c = c * f;
  }
  return r;
}

template <class K>
Dense<K> divide_all(Dense<K> a, const MultiPoly<K>& d) {
  if (d.is_constant()) {
    const K inv = inverse(d.leading().c);
    for (auto& c : a) c = inv * c;
    return a;
  }
  for (auto& c : a) c = exact_divide(c, d);
  return a;
}

// Subresultant PRS (Cohen, Algorithm 3.3.7 without content extraction).
// Returns the resultant and, through `last`, the last nonzero remainder.
template <class K>
MultiPoly<K> subresultant(Dense<K> A, Dense<K> B, int nvars, Dense<K>* last) {
  MultiPoly<K> zero(nvars);
  trim(A);
  trim(B);
  if (A.empty() || B.empty()) {
    if (last) *last = A.empty() ? B : A;
    return zero;
  }
  int s = 1;
  if (deg(A) < deg(B)) {
    std::swap(A, B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -1;
  }
  if (deg(B) == 0) {
    if (last) *last = B;
    MultiPoly<K> r = pow(B[0], static_cast<unsigned>(deg(A)));
    return s < 0 ? -r : r;
  }
  MultiPoly<K> g = MultiPoly<K>::constant(nvars, K(1)), h = g;
  while (true) {
    const int delta = deg(A) - deg(B);
    if (deg(A) % 2 == 1 && deg(B) % 2 == 1) s = -s;
    Dense<K> R = prem(A, B);
    if (R.empty()) {
      if (last) *last = B;
      return zero;
    }
    A = std::move(B);
    B = divide_all(std::move(R), g * pow(h, static_cast<unsigned>(delta)));
    g = A.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_divide(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (deg(B) <= 0) break;
  }
  if (last) *last = B;
  const int da = deg(A);
  MultiPoly<K> r = pow(B[0], static_cast<unsigned>(da));
  if (da > 1) r = exact_divide(r, pow(h, static_cast<unsigned>(da - 1)));
  else if (da == 0) r = h;  // unreachable: deg A >= 1 here
  return s < 0 ? -r : r;
}

template <class K>
Dense<K> to_dense(const MultiPoly<K>& f, int var) {
  Dense<K> d = f.coeffs_in(var);
  trim(d);
  return d;
}

}  // namespace detail

// Res_var(f, g) by the subresultant PRS; var must occur in f or g.
template <class K>
MultiPoly<K> resultant(const MultiPoly<K>& f, const MultiPoly<K>& g, int var) {
  const int n = std::max(f.nvars(), g.nvars());
  if (f.degree(var) <= 0 && g.degree(var) <= 0) {
    if (f.is_zero() || g.is_zero()) return MultiPoly<K>(n);
    throw InvariantViolation("resultant: neither polynomial involves the variable");
  }
  return detail::subresultant(detail::to_dense(f.with_nvars(n), var), detail::to_dense(g.with_nvars(n), var), n,
                              static_cast<detail::Dense<K>*>(nullptr));
}

// Scales p so its grevlex-leading coefficient is 1.
template <class K>
MultiPoly<K> make_monic(const MultiPoly<K>& p) {
  if (p.is_zero()) return p;
  return inverse(p.leading().c) * p;
}

template <class K>
MultiPoly<K> gcd(const MultiPoly<K>& a, const MultiPoly<K>& b);

// gcd of the coefficients of p with respect to var.
template <class K>
MultiPoly<K> content_in(const MultiPoly<K>& p, int var) {
  MultiPoly<K> c(p.nvars());
  for (const auto& q : p.coeffs_in(var)) {
    if (q.is_zero()) continue;
    c = c.is_zero() ? make_monic(q) : gcd(c, q);
    if (c.is_constant()) break;
  }
  return c;
}

// Monic gcd over the coefficient field, recursive on variables with the
// subresultant PRS for the main variable.
template <class K>
MultiPoly<K> gcd(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  const int n = std::max(a.nvars(), b.nvars());
  if (a.is_zero()) return make_monic(b.with_nvars(n));
  if (b.is_zero()) return make_monic(a.with_nvars(n));
  if (a.is_constant() || b.is_constant()) return MultiPoly<K>::constant(n, K(1));
  int v = -1;
  for (int i = 0; i < n && v < 0; ++i)
    if (a.depends_on(i) || b.depends_on(i)) v = i;
  const bool in_a = a.depends_on(v), in_b = b.depends_on(v);
  if (!in_a) return gcd(a.with_nvars(n), content_in(b.with_nvars(n), v));
  if (!in_b) return gcd(content_in(a.with_nvars(n), v), b.with_nvars(n));
  MultiPoly<K> ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly<K> pa = exact_divide(a.with_nvars(n), ca), pb = exact_divide(b.with_nvars(n), cb);
  MultiPoly<K> c = gcd(ca, cb);
  detail::Dense<K> last;
  detail::subresultant(detail::to_dense(pa, v), detail::to_dense(pb, v), n, &last);
  MultiPoly<K> l = MultiPoly<K>::from_coeffs_in(n, v, last);
  if (l.degree(v) <= 0) return c.with_nvars(n);
  l = exact_divide(l, content_in(l, v));
  return make_monic(c.with_nvars(n) * l);
}

// Squarefree part up to a scalar: p / gcd(p, all partial derivatives).
template <class K>
MultiPoly<K> squarefree_part_gcd(const MultiPoly<K>& p) {
  if (p.is_constant()) return p;
  MultiPoly<K> g = p;
  for (int i = 0; i < p.nvars() && !g.is_constant(); ++i)
    if (p.depends_on(i)) g = gcd(g, p.derivative(i));
  if (g.is_constant()) return p;
  return exact_divide(p, g);
}

// Cheap certificate: for each variable v of p, specialize the others at a
// point keeping deg_v and test the univariate image for squarefreeness. A
// repeated factor involving v would survive such a specialization, so passing
// for every v proves p squarefree. Returns false when no certificate was found.
template <class K>
bool certify_squarefree(const MultiPoly<K>& p) {
  const int n = p.nvars();
  for (int v = 0; v < n; ++v) {
    if (!p.depends_on(v)) continue;
    bool ok = false;
    for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
      std::vector<K> point(static_cast<std::size_t>(n), K(0));
      for (int i = 0; i < n; ++i) point[static_cast<std::size_t>(i)] = K(static_cast<long>(3 + 7 * i + 13 * attempt + (i * i) % 5));
      MultiPoly<K> q = p;
      for (int i = 0; i < n; ++i)
        if (i != v) q = q.eval(i, point[static_cast<std::size_t>(i)]);
      UniPoly<K> u = q.to_uni(v);
      if (u.degree() != p.degree(v)) continue;
      ok = is_squarefree(u);
      if (!ok) return false;
    }
    if (!ok) return false;
  }
  return true;
}

template <class K>
MultiPoly<K> squarefree_part(const MultiPoly<K>& p) {
  if (p.is_constant() || certify_squarefree(p)) return p;
  return squarefree_part_gcd(p);
}

}  // namespace aode
