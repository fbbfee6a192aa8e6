#pragma once

#include <random>
#include <vector>

#include "aode/algext.hpp"
#include "aode/elimination.hpp"
#include "aode/multipoly.hpp"
#include "aode/unipoly.hpp"

namespace aode::testing {

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rational rat(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Random polynomial of exact degree d with integer coefficients in [-r, r].
inline QPoly random_qpoly(std::mt19937_64& rng, int d, long r = 5) {
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = uniform(rng, -r, r);
  while (sgn(c.back()) == 0) c.back() = uniform(rng, -r, r);
  return QPoly(c);
}

// Random polynomial in n variables with `terms` terms of total degree <= d.
inline MultiPoly<Rational> random_mpoly(std::mt19937_64& rng, int n, int d, int terms, long r = 5) {
  std::vector<MultiPoly<Rational>::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    int left = static_cast<int>(uniform(rng, 0, d));
    for (int i = 0; i < n && left > 0; ++i) {
      int e = static_cast<int>(uniform(rng, 0, left));
      m.set(i, static_cast<unsigned>(e));
      left -= e;
    }
    long c = uniform(rng, -r, r);
    if (c == 0) c = 1;
    ts.push_back({m, Rational(c)});
  }
  return MultiPoly<Rational>(n, ts);
}

// Linear A, B and a system they solve: P2, Q2 are P1, Q1 composed with the
// Moebius map L with (A(x+1), B(x+1)) = L(A(x), B(x)); the first pair is then
// scaled by c.
struct Planted {
  DifferenceSystem sys;
  QPoly A, B;
};

inline Planted planted(std::mt19937_64& rng, int n, const Rational& c = 1) {
  for (;;) {
    Rational a1 = uniform(rng, -4, 4), a0 = uniform(rng, -4, 4), b1 = uniform(rng, -4, 4), b0 = uniform(rng, -4, 4);
    Rational D = a1 * b0 - a0 * b1;
    if (sgn(D) == 0) continue;
    QPoly P1 = random_qpoly(rng, static_cast<int>(uniform(rng, 0, n)), 3), Q1 = random_qpoly(rng, n, 3);
    if (uniform(rng, 0, 1)) std::swap(P1, Q1);
    if (gcd(P1, Q1).degree() > 0) continue;
    const int N = 2;
    MultiPoly<Rational> z = MultiPoly<Rational>::variable(N, 0), w = MultiPoly<Rational>::variable(N, 1);
    MultiPoly<Rational> one = Rational(1 / D) * (a1 * w - b1 * z);
    MultiPoly<Rational> Lz = z + a1 * one, Lw = w + b1 * one;
    auto side = [&](const QPoly& p) {
      MultiPoly<Rational> h = homogenize(p, n, N, 0, 1).substitute({Lz, Lw});
      return h.eval(1, Rational(1)).to_uni(0);
    };
    Planted out;
    out.sys.P1 = c * P1;
    out.sys.Q1 = c * Q1;
    out.sys.P2 = side(P1);
    out.sys.Q2 = side(Q1);
    out.sys.n = n;
    out.A = QPoly(std::vector<Rational>{a0, a1});
    out.B = QPoly(std::vector<Rational>{b0, b1});
    return out;
  }
}


// Sylvester determinant by Bareiss elimination; independent of the PRS code.
Rational sylvester_det(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rational>> S(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N), 0));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = f[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = g[k];
  Rational prev = 1, sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    auto K = static_cast<std::size_t>(k);
    if (sgn(S[K][K]) == 0) {
      std::size_t p = K + 1;
      while (p < S.size() && sgn(S[p][K]) == 0) ++p;
      if (p == S.size()) return 0;
      std::swap(S[K], S[p]);
      sign = -sign;
    }
    for (std::size_t i = K + 1; i < S.size(); ++i)
      for (std::size_t j = K + 1; j < S.size(); ++j) S[i][j] = (S[i][j] * S[K][K] - S[i][K] * S[K][j]) / prev;
    prev = S[K][K];
  }
  return sign * S.back().back();
}

QPoly specialize(const MultiPoly<Rational>& f, int var, const std::vector<Rational>& pt) {
  MultiPoly<Rational> r = f;
  for (int i = 0; i < f.nvars(); ++i)
    if (i != var) r = r.eval(i, pt[static_cast<std::size_t>(i)]);
  return r.to_uni(var);
}

// Random homogeneous polynomial of degree D in three variables.
MultiPoly<Scalar> random_homogeneous(std::mt19937_64& rng, int D, int terms) {
  std::vector<MultiPoly<Scalar>::Term> ts;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    const int a = static_cast<int>(uniform(rng, 0, D));
    const int b = static_cast<int>(uniform(rng, 0, D - a));
    m.set(0, static_cast<unsigned>(a));
    m.set(1, static_cast<unsigned>(b));
    m.set(2, static_cast<unsigned>(D - a - b));
    long c = uniform(rng, -5, 5);
    ts.push_back({m, Scalar(c == 0 ? 1 : c)});
  }
  return MultiPoly<Scalar>(3, ts);
}

// Null space of a dense rational matrix (rows x cols) by Gauss-Jordan.
std::vector<std::vector<Rational>> null_space(std::vector<std::vector<Rational>> A, std::size_t cols) {
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && sgn(A[p][c]) == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    const Rational inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || sgn(A[i][c]) == 0) continue;
      const Rational f = A[i][c];
      for (std::size_t j = 0; j < cols; ++j) A[i][j] -= f * A[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Rational> x(cols, 0);
    x[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) x[c] = -A[static_cast<std::size_t>(pivot_of_col[c])][free];
    basis.push_back(x);
  }
  return basis;
}

// Nonzero homogeneous F of degree D with F(p(x), p(x+1), p(x+2)) = 0.
MultiPoly<Scalar> annihilator(std::mt19937_64& rng, const QPoly& p, int D) {
  const QPoly p1 = p.shift(Rational(1)), p2 = p.shift(Rational(2));
  std::vector<Monomial> mons;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      Monomial m;
      m.set(0, static_cast<unsigned>(a));
      m.set(1, static_cast<unsigned>(b));
      m.set(2, static_cast<unsigned>(D - a - b));
      mons.push_back(m);
    }
  const int rows = D * p.degree() + 1;
  std::vector<std::vector<Rational>> A(static_cast<std::size_t>(rows), std::vector<Rational>(mons.size(), 0));
  for (std::size_t j = 0; j < mons.size(); ++j) {
    QPoly img = pow(p, mons[j][0]) * pow(p1, mons[j][1]) * pow(p2, mons[j][2]);
    for (int k = 0; k <= img.degree(); ++k) A[static_cast<std::size_t>(k)][j] = img[k];
  }
  auto basis = null_space(A, mons.size());
  if (basis.empty()) throw InvariantViolation("annihilator: empty null space");
  for (;;) {
    std::vector<Rational> mix;
    for (std::size_t k = 0; k < basis.size(); ++k) mix.push_back(uniform(rng, -3, 3));
    std::vector<MultiPoly<Scalar>::Term> ts;
    for (std::size_t j = 0; j < mons.size(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < basis.size(); ++k) s += mix[k] * basis[k][j];
      if (sgn(s) != 0) ts.push_back({mons[j], Scalar(s)});
    }
    if (!ts.empty()) return MultiPoly<Scalar>(3, ts);
  }
}

}  // namespace aode::testing
