#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aode/rational.hpp"
#include "aode/unipoly.hpp"

namespace aode {

inline constexpr int kMaxVars = 32;

// Exponent vector. Unused slots stay zero, so comparisons ignore arity.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
  void set(int i, unsigned v) {
    deg = deg - e[static_cast<std::size_t>(i)] + v;
    e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(v);
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[static_cast<std::size_t>(i)] = a.e[static_cast<std::size_t>(i)] + b.e[static_cast<std::size_t>(i)];
    r.deg = a.deg + b.deg;
    return r;
  }
  bool divides(const Monomial& b) const {
    if (deg > b.deg) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  // b / *this; requires divides(b).
  Monomial quotient_of(const Monomial& b) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[static_cast<std::size_t>(i)] = b.e[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)];
    r.deg = b.deg - deg;
    return r;
  }
  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
      r.deg += r.e[static_cast<std::size_t>(i)];
    }
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[static_cast<std::size_t>(i)] && b.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }
};

// Lex, graded reverse lex, and block orders: elimination_order(k) compares
// grevlex on variables [0, k) first and breaks ties by grevlex on the rest.
enum class Order : int { Lex = 0, GrevLex = 1 };

inline Order elimination_order(int k) { return static_cast<Order>(2 + k); }

namespace detail {
inline int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  unsigned da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[static_cast<std::size_t>(i)];
    db += b.e[static_cast<std::size_t>(i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    const auto x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
    if (x != y) return x > y ? -1 : 1;
  }
  return 0;
}
}  // namespace detail

// -1, 0, 1 as a is smaller, equal, larger than b.
inline int compare(const Monomial& a, const Monomial& b, Order ord) {
  if (ord == Order::GrevLex) {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
      const auto x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
      if (x != y) return x > y ? -1 : 1;
    }
    return 0;
  }
  if (ord != Order::Lex) {
    const int k = static_cast<int>(ord) - 2;
    const int c = detail::grevlex_range(a, b, 0, k);
    return c != 0 ? c : detail::grevlex_range(a, b, k, kMaxVars);
  }
  for (int i = 0; i < kMaxVars; ++i) {
    const auto x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// Sparse polynomial in a fixed number of positional variables. Terms are kept
// sorted by descending graded reverse lexicographic order with no zero
// coefficients. Variable names live at the boundary (parser and printer).
template <class K>
class MultiPoly {
 public:
  struct Term {
    Monomial m;
    K c;
  };

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : n_(nvars) {
    if (nvars < 0 || nvars > kMaxVars) throw InvariantViolation("too many variables");
  }
  MultiPoly(int nvars, std::vector<Term> terms) : MultiPoly(nvars) {
    t_ = std::move(terms);
    canonicalize();
  }
  static MultiPoly constant(int nvars, const K& c) {
    MultiPoly p(nvars);
    if (!detail::zero_p(c)) p.t_.push_back({Monomial{}, c});
    return p;
  }
  static MultiPoly variable(int nvars, int i, unsigned power = 1) {
    MultiPoly p(nvars);
    Monomial m;
    m.set(i, power);
    p.t_.push_back({m, K(1)});
    return p;
  }
  static MultiPoly term(int nvars, const Monomial& m, const K& c) {
    MultiPoly p(nvars);
    if (!detail::zero_p(c)) p.t_.push_back({m, c});
    return p;
  }

  int nvars() const { return n_; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.deg == 0); }
  K constant_term() const {
    if (!t_.empty() && t_.back().m.deg == 0) return t_.back().c;
    return K(0);
  }
  const Term& leading() const { return t_.front(); }

  int total_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.front().m.deg); }
  int degree(int var) const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m[var]));
    return d;
  }
  int low_degree(int var) const {
    int d = -1;
    for (const auto& t : t_) d = d < 0 ? t.m[var] : std::min(d, static_cast<int>(t.m[var]));
    return d;
  }
  bool depends_on(int var) const { return degree(var) > 0; }
  bool is_homogeneous() const {
    for (const auto& t : t_)
      if (t.m.deg != t_.front().m.deg) return false;
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r(std::max(a.n_, b.n_));
    if (a.t_.empty() || b.t_.empty()) return r;
    if (b.t_.size() == 1) return a.mul_term(b.t_[0].m, b.t_[0].c);
    if (a.t_.size() == 1) return b.mul_term(a.t_[0].m, a.t_[0].c);
    r.t_.reserve(a.t_.size() * b.t_.size());
    for (const auto& x : a.t_)
      for (const auto& y : b.t_) r.t_.push_back({x.m * y.m, x.c * y.c});
    r.canonicalize();
    return r;
  }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  friend MultiPoly operator*(const K& s, const MultiPoly& a) {
    MultiPoly r(a.n_);
    if (detail::zero_p(s)) return r;
    r.t_.reserve(a.t_.size());
    for (const auto& t : a.t_) {
      K c = s * t.c;
      if (!detail::zero_p(c)) r.t_.push_back({t.m, std::move(c)});
    }
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly mul_term(const Monomial& m, const K& c) const {
    MultiPoly r(n_);
    if (detail::zero_p(c)) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
      K v = t.c * c;
      if (!detail::zero_p(v)) r.t_.push_back({t.m * m, std::move(v)});
    }
    return r;  // multiplying by a monomial preserves the order
  }

  // Same polynomial viewed with a different number of variables; dropped
  // variables must not occur.
  MultiPoly with_nvars(int nvars) const {
    for (int i = nvars; i < n_; ++i)
      if (depends_on(i)) throw InvariantViolation("with_nvars would drop a used variable");
    MultiPoly r = *this;
    r.n_ = nvars;
    return r;
  }

  // Coefficients with respect to `var`, index = power; the entries do not
  // contain `var`.
  std::vector<MultiPoly> coeffs_in(int var) const {
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree(var), 0)) + 1, MultiPoly(n_));
    if (t_.empty()) return {};
    for (const auto& t : t_) {
      Monomial m = t.m;
      const auto k = m[var];
      m.set(var, 0);
      out[k].t_.push_back({m, t.c});
    }
    return out;  // subsequences of a sorted list, order preserved
  }
  static MultiPoly from_coeffs_in(int nvars, int var, const std::vector<MultiPoly>& cs) {
    MultiPoly r(nvars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k].is_zero()) continue;
      Monomial m;
      m.set(var, static_cast<unsigned>(k));
      r += cs[k].mul_term(m, K(1));
    }
    return r;
  }
  MultiPoly lc_in(int var) const {
    auto cs = coeffs_in(var);
    return cs.empty() ? MultiPoly(n_) : cs.back();
  }

  // var := value.
  MultiPoly eval(int var, const K& value) const {
    auto cs = coeffs_in(var);
    MultiPoly r(n_);
    for (std::size_t k = cs.size(); k-- > 0;) r = value * r + cs[k];
    return r;
  }
  // All variables := values (values.size() >= nvars()).
  K eval_all(const std::vector<K>& values) const {
    K r(0);
    for (const auto& t : t_) {
      K v = t.c;
      for (int i = 0; i < n_; ++i)
        for (unsigned k = 0; k < t.m[i]; ++k) v = v * values[static_cast<std::size_t>(i)];
      r = r + v;
    }
    return r;
  }
  // Variable i := images[i]; all images share one arity, which the result takes.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const {
    const int target = images.empty() ? n_ : images[0].nvars();
    MultiPoly r(target);
    // Horner in each variable would be faster; cached powers keep this simple.
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(n_));
    auto power = [&](int i, unsigned k) -> const MultiPoly& {
      auto& v = powers[static_cast<std::size_t>(i)];
      if (v.empty()) v.push_back(MultiPoly::constant(target, K(1)));
      while (v.size() <= k) v.push_back(v.back() * images[static_cast<std::size_t>(i)]);
      return v[k];
    };
    std::vector<Term> acc;
    for (const auto& t : t_) {
      MultiPoly p = MultiPoly::constant(target, t.c);
      for (int i = 0; i < n_; ++i)
        if (t.m[i]) p = p * power(i, t.m[i]);
      acc.insert(acc.end(), p.t_.begin(), p.t_.end());
    }
    r.t_ = std::move(acc);
    r.canonicalize();
    return r;
  }
  // Variable i of this polynomial becomes variable map[i] of a ring with `nvars` variables.
  MultiPoly rename(const std::vector<int>& map, int nvars) const {
    MultiPoly r(nvars);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
      Monomial m;
      for (int i = 0; i < n_; ++i)
        if (t.m[i]) m.set(map[static_cast<std::size_t>(i)], m[map[static_cast<std::size_t>(i)]] + t.m[i]);
      r.t_.push_back({m, t.c});
    }
    r.canonicalize();
    return r;
  }
  MultiPoly derivative(int var) const {
    MultiPoly r(n_);
    for (const auto& t : t_) {
      const unsigned k = t.m[var];
      if (!k) continue;
      Monomial m = t.m;
      m.set(var, k - 1);
      r.t_.push_back({m, K(static_cast<long>(k)) * t.c});
    }
    r.canonicalize();
    return r;
  }

  // Univariate view; every variable other than `var` must be absent.
  UniPoly<K> to_uni(int var) const {
    std::vector<K> c(static_cast<std::size_t>(std::max(degree(var), 0)) + 1, K(0));
    for (const auto& t : t_) {
      if (t.m.deg != t.m[var]) throw InvariantViolation("to_uni on a polynomial with other variables");
      c[t.m[var]] = t.c;
    }
    return UniPoly<K>(std::move(c));
  }
  static MultiPoly from_uni(int nvars, int var, const UniPoly<K>& u) {
    MultiPoly r(nvars);
    for (int k = u.degree(); k >= 0; --k) {
      if (detail::zero_p(u.coeffs()[static_cast<std::size_t>(k)])) continue;
      Monomial m;
      m.set(var, static_cast<unsigned>(k));
      r.t_.push_back({m, u.coeffs()[static_cast<std::size_t>(k)]});
    }
    r.canonicalize();
    return r;
  }

  // Coefficient lookup (linear scan).
  K coeff(const Monomial& m) const {
    for (const auto& t : t_)
      if (t.m == m) return t.c;
    return K(0);
  }

  // Restore sortedness and merge equal monomials after raw edits.
  void canonicalize() {
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return compare(a.m, b.m, Order::GrevLex) > 0; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = out.back().c + t.c;
      } else {
        if (!out.empty() && detail::zero_p(out.back().c)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && detail::zero_p(out.back().c)) out.pop_back();
    t_ = std::move(out);
  }

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    MultiPoly r(std::max(a.n_, b.n_));
    r.t_.reserve(a.t_.size() + b.t_.size());
    std::size_t i = 0, j = 0;
    while (i < a.t_.size() || j < b.t_.size()) {
      int c;
      if (i == a.t_.size()) c = -1;
      else if (j == b.t_.size()) c = 1;
      else c = compare(a.t_[i].m, b.t_[j].m, Order::GrevLex);
      if (c > 0) {
        r.t_.push_back(a.t_[i++]);
      } else if (c < 0) {
        r.t_.push_back({b.t_[j].m, subtract ? K(-b.t_[j].c) : b.t_[j].c});
        ++j;
      } else {
        K v = subtract ? K(a.t_[i].c - b.t_[j].c) : K(a.t_[i].c + b.t_[j].c);
        if (!detail::zero_p(v)) r.t_.push_back({a.t_[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int n_ = 0;
  std::vector<Term> t_;
};

template <class K>
MultiPoly<K> pow(const MultiPoly<K>& p, unsigned e) {
  MultiPoly<K> r = MultiPoly<K>::constant(p.nvars(), K(1)), b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

// Exact quotient a / b; throws when b does not divide a.
template <class K>
MultiPoly<K> exact_divide(const MultiPoly<K>& a, const MultiPoly<K>& b) {
  if (b.is_zero()) throw InvariantViolation("multivariate division by zero");
  if (b.is_constant()) return inverse(b.leading().c) * a;
  const auto& lt = b.leading();
  const K inv = inverse(lt.c);
  MultiPoly<K> q(std::max(a.nvars(), b.nvars())), r = a;
  while (!r.is_zero()) {
    const auto& top = r.leading();
    if (!lt.m.divides(top.m)) throw InvariantViolation("inexact multivariate division");
    Monomial m = lt.m.quotient_of(top.m);
    K c = top.c * inv;
    q += MultiPoly<K>::term(q.nvars(), m, c);
    r -= b.mul_term(m, c);
  }
  return q;
}

}  // namespace aode
