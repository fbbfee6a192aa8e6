#pragma once

#include <utility>

#include "aode/unipoly.hpp"

namespace aode {

// Univariate rational function in canonical form: coprime, monic denominator.
template <class K>
class RatFunc {
 public:
  RatFunc() : den_(K(1)) {}
  RatFunc(const UniPoly<K>& p) : num_(p), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const UniPoly<K>& num, const UniPoly<K>& den) { assign(num, den); }

  const UniPoly<K>& num() const { return num_; }
  const UniPoly<K>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  // max(deg num, deg den)
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw InvariantViolation("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // x -> x + a
  RatFunc shift(const K& a) const { return RatFunc(num_.shift(a), den_.shift(a)); }
  // this(q(x)) for a rational function q.
  RatFunc compose(const RatFunc& q) const {
    // Homogenized evaluation: num(q) / den(q) with q = n/d.
    const int d = degree();
    UniPoly<K> n = hom_eval(num_, q, d), m = hom_eval(den_, q, d);
    return RatFunc(n, m);
  }

 private:
  static UniPoly<K> hom_eval(const UniPoly<K>& p, const RatFunc& q, int d) {
    // sum c_i n^i d^(d-i)
    UniPoly<K> acc;
    std::vector<UniPoly<K>> npow{UniPoly<K>(K(1))}, dpow{UniPoly<K>(K(1))};
    for (int i = 1; i <= d; ++i) {
      npow.push_back(npow.back() * q.num_);
      dpow.push_back(dpow.back() * q.den_);
    }
    for (int i = 0; i <= p.degree(); ++i)
      acc += p.coeffs()[static_cast<std::size_t>(i)] * (npow[static_cast<std::size_t>(i)] * dpow[static_cast<std::size_t>(d - i)]);
    return acc;
  }
  void assign(const UniPoly<K>& num, const UniPoly<K>& den) {
    if (den.is_zero()) throw InputError("rational function with zero denominator");
    if (num.is_zero()) {
      num_ = UniPoly<K>();
      den_ = UniPoly<K>(K(1));
      return;
    }
    UniPoly<K> g = gcd(num, den);
    UniPoly<K> n = exact_quotient(num, g), m = exact_quotient(den, g);
    K inv = inverse(m.lc());
    num_ = inv * n;
    den_ = inv * m;
  }
  UniPoly<K> num_, den_;
};

template <class K>
RatFunc<K> normalize(const UniPoly<K>& num, const UniPoly<K>& den) {
  return RatFunc<K>(num, den);
}

using QRatFunc = RatFunc<Rational>;

}  // namespace aode
