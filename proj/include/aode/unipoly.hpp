#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "aode/rational.hpp"

namespace aode {

namespace detail {
// Unqualified call so argument-dependent lookup reaches every scalar type.
template <class K>
bool zero_p(const K& a) {
  return is_zero(a);
}
}  // namespace detail

// Dense univariate polynomial over a field K, coefficients stored low to high.
// The zero polynomial has no coefficients and degree -1.
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(const K& constant) {  // NOLINT(google-explicit-constructor)
    if (!detail::zero_p(constant)) c_.push_back(constant);
  }

  static UniPoly monomial(const K& coeff, int degree) {
    if (detail::zero_p(coeff)) return {};
    std::vector<K> c(static_cast<std::size_t>(degree) + 1, K(0));
    c.back() = coeff;
    return UniPoly(std::move(c));
  }
  static UniPoly x() { return monomial(K(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  // Coefficient of x^i; zero past the degree.
  K operator[](int i) const {
    if (i < 0 || i > degree()) return K(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const K& lc() const { return c_.back(); }
  // Lowest index with a nonzero coefficient; -1 for zero.
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!detail::zero_p(c_[i])) return static_cast<int>(i);
    return -1;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::zero_p(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend UniPoly operator*(const K& s, const UniPoly& a) {
    if (detail::zero_p(s)) return {};
    UniPoly r = a;
    for (auto& v : r.c_) v = s * v;
    r.trim();
    return r;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  K eval(const K& v) const {
    K r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * v + c_[i];
    return r;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> r(c_.size() - 1, K(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(r));
  }

  // p(q(x)).
  UniPoly compose(const UniPoly& q) const {
    UniPoly r;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * q + UniPoly(c_[i]);
    return r;
  }

  // p(x + a) by Horner-style Taylor shift.
  UniPoly shift(const K& a) const {
    std::vector<K> r = c_;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] = r[j - 1] + a * r[j];
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    return inverse(lc()) * *this;
  }

  // x^k * p
  UniPoly mul_xk(int k) const {
    if (is_zero()) return {};
    std::vector<K> r(static_cast<std::size_t>(k), K(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::zero_p(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Division with remainder over a field. Inverting the leading coefficient of
// b may expose a zero divisor when K is an algebraic extension.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly<K>(), a};
  const K inv = inverse(b.lc());
  std::vector<K> r = a.coeffs();
  std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), K(0));
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const K& top = r[static_cast<std::size_t>(i)];
    if (detail::zero_p(top)) continue;
    K f = top * inv;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] =
          r[static_cast<std::size_t>(i - db + j)] - f * b.coeffs()[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(i - db)] = f;
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly<K>(std::move(q)), UniPoly<K>(std::move(r))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).second;
}

// Quotient; throws when b does not divide a.
template <class K>
UniPoly<K> exact_quotient(const UniPoly<K>& a, const UniPoly<K>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantViolation("inexact polynomial division");
  return q;
}

// Monic gcd; gcd(0, 0) is rejected.
template <class K>
UniPoly<K> gcd(UniPoly<K> a, UniPoly<K> b) {
  if (a.is_zero() && b.is_zero()) throw InvariantViolation("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns g = gcd(a, b) monic together with s, t with s a + t b = g.
template <class K>
UniPoly<K> ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b, UniPoly<K>& s, UniPoly<K>& t) {
  UniPoly<K> r0 = a, r1 = b, s0(K(1)), s1, t0, t1(K(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly<K> s2 = s0 - q * s1;
    UniPoly<K> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) throw InvariantViolation("ext_gcd(0, 0) is undefined");
  K inv = inverse(r0.lc());
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

// Product of the distinct irreducible factors, made monic (characteristic 0).
template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly<K>(K(1));
  UniPoly<K> g = gcd(p, p.derivative());
  return exact_quotient(p, g).monic();
}

template <class K>
bool is_squarefree(const UniPoly<K>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

template <class K>
UniPoly<K> pow(const UniPoly<K>& p, unsigned e) {
  UniPoly<K> r(K(1)), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

using QPoly = UniPoly<Rational>;

// Scales p so the coefficients are coprime integers and the leading one is positive.
QPoly primitive_integer(const QPoly& p);
// Integer denominators cleared: the least common multiple of all denominators.
Integer denominator_lcm(const QPoly& p);

}  // namespace aode
