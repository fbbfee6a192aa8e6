#include "aode/algext.hpp"

#include "aode/roots.hpp"

namespace aode {

bool rational_sqrt(const Rational& a, Rational& root) {
  if (sgn(a) < 0) return false;
  if (!mpz_perfect_square_p(a.get_num_mpz_t()) || !mpz_perfect_square_p(a.get_den_mpz_t())) return false;
  Integer n = sqrt(Integer(a.get_num())), d = sqrt(Integer(a.get_den()));
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

void square_split(const Rational& a, Rational& s, Integer& r) {
  if (sgn(a) == 0) throw InvariantViolation("square_split of zero");
  Integer n = a.get_num() * a.get_den();
  const int sign = sgn(n);
  n = abs(n);
  Integer sq = 1;
  for (unsigned long p = 2; p <= 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p * p)) {
      n /= static_cast<unsigned long>(p * p);
      sq *= static_cast<unsigned long>(p);
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root = sqrt(n);
    sq *= root;
    n = 1;
  }
  r = sign * n;
  s = Rational(sq, Integer(a.get_den()));
  s.canonicalize();
}

QPoly primitive_integer(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer l = denominator_lcm(p);
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = Integer(c * l);
    g = gcd(g, v);
  }
  Rational f(l, g);
  f.canonicalize();
  if (sgn(p.lc()) < 0) f = -f;
  return f * p;
}

Integer denominator_lcm(const QPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, Integer(c.get_den()));
  return l;
}

std::string Field::theta_name() const {
  if (radicand != 0) return "sqrt(" + radicand.get_str() + ")";
  return "a";
}

FieldPtr make_field(const QPoly& modulus) {
  if (modulus.degree() < 1) throw InvariantViolation("field modulus must be non-constant");
  auto f = std::make_shared<Field>();
  f->modulus = modulus.monic();
  if (f->modulus.degree() == 2 && f->modulus[1] == 0 && f->modulus[0].get_den() == 1) {
    Rational root;
    if (!rational_sqrt(-f->modulus[0], root)) {
      f->radicand = Integer(-f->modulus[0]);
      f->irreducible = true;
    }
  } else if (f->modulus.degree() <= 3) {
    f->irreducible = rational_roots(f->modulus).empty();
  }
  return f;
}

FieldPtr make_quadratic_field(const Integer& r) {
  if (mpz_perfect_square_p(r.get_mpz_t())) throw InvariantViolation("radicand is a perfect square");
  return make_field(QPoly(std::vector<Rational>{Rational(-r), Rational(0), Rational(1)}));
}

Scalar::Scalar(FieldPtr f, const QPoly& v) : f_(std::move(f)), v_(v) {
  if (f_ && v_.degree() >= f_->degree()) v_ = v_ % f_->modulus;
  if (!f_ && v_.degree() > 0) throw InvariantViolation("non-constant rational scalar");
}

Scalar Scalar::theta(const FieldPtr& f) { return Scalar(f, QPoly::x()); }

Rational Scalar::rational_value() const {
  if (!is_rational()) throw InvariantViolation("scalar is not rational");
  return v_.is_zero() ? Rational(0) : v_[0];
}

bool Scalar::is_zero_strict() const {
  if (v_.is_zero()) return true;
  if (v_.degree() == 0 || !f_ || f_->irreducible) return false;
  QPoly g = gcd(v_, f_->modulus);
  if (g.degree() == 0) return false;
  throw SplitRequest(f_, g);
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw InvariantViolation("scalars from different algebraic extensions");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.v_ = -r.v_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.f_ = common_field(a.f_, b.f_);
  r.v_ = a.v_ + b.v_;
  return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.f_ = common_field(a.f_, b.f_);
  r.v_ = a.v_ - b.v_;
  return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  r.f_ = common_field(a.f_, b.f_);
  if (a.v_.degree() <= 0 && !a.v_.is_zero()) {
    r.v_ = a.v_[0] * b.v_;
  } else if (b.v_.degree() <= 0 && !b.v_.is_zero()) {
    r.v_ = b.v_[0] * a.v_;
  } else {
    r.v_ = a.v_ * b.v_;
    if (r.f_ && r.v_.degree() >= r.f_->degree()) r.v_ = r.v_ % r.f_->modulus;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (v_.is_zero()) throw InvariantViolation("division by zero scalar");
  Scalar r;
  r.f_ = f_;
  if (v_.degree() == 0) {
    r.v_ = QPoly(Rational(1) / v_[0]);
    return r;
  }
  QPoly s, t;
  QPoly g = ext_gcd(v_, f_->modulus, s, t);
  if (g.degree() > 0) throw SplitRequest(f_, g);
  r.v_ = s % f_->modulus;
  return r;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  common_field(a.f_, b.f_);
  return a.v_ == b.v_;
}

std::string to_string(const Scalar& a) {
  if (a.is_rational()) return a.rational_value().get_str();
  const std::string th = a.field()->theta_name();
  std::string out;
  const auto& c = a.rep().coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    Rational v = c[i];
    if (!out.empty()) {
      out += sgn(v) < 0 ? " - " : " + ";
      v = abs(v);
    } else if (sgn(v) < 0 && i > 0) {
      out += "-";
      v = abs(v);
    }
    if (i == 0) {
      out += v.get_str();
      continue;
    }
    if (v != 1) out += v.get_str() + "*";
    out += th;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FieldMap::FieldMap(FieldPtr from, const QPoly& to_modulus) : from_(std::move(from)), factor_(to_modulus.monic()) {
  if (!from_ || !(from_->modulus % factor_).is_zero())
    throw InvariantViolation("field map target does not divide the modulus");
  if (factor_.degree() > 1) {
    auto f = std::make_shared<Field>(*from_);
    f->modulus = factor_;
    f->radicand = factor_ == from_->modulus ? from_->radicand : Integer(0);
    f->irreducible = from_->irreducible;
    if (!f->irreducible && factor_.degree() <= 3) f->irreducible = rational_roots(factor_).empty();
    to_ = f;
  }
}

Scalar FieldMap::operator()(const Scalar& x) const {
  if (!x.field()) return x;
  if (x.field() != from_) throw InvariantViolation("field map applied to a foreign scalar");
  QPoly r = x.rep() % factor_;
  if (!to_) return Scalar(r.is_zero() ? Rational(0) : r[0]);
  return Scalar(to_, r);
}

std::pair<FieldMap, FieldMap> split_maps(const SplitRequest& s) {
  QPoly other = exact_quotient(s.field->modulus, s.factor);
  return {FieldMap(s.field, s.factor), FieldMap(s.field, other)};
}

QPoly minimal_polynomial(const Scalar& x) {
  if (x.is_rational()) return QPoly(std::vector<Rational>{-x.rational_value(), Rational(1)});
  const int d = x.field()->degree();
  // Rows hold x^0, x^1, ... in the power basis; reduce each new row against the
  // previous ones while tracking the combination, stop at the first dependency.
  std::vector<std::vector<Rational>> basis;  // echelon rows
  std::vector<std::vector<Rational>> combo;  // row as combination of powers
  std::vector<int> pivots;
  Scalar pw(1);
  for (int k = 0; k <= d; ++k) {
    std::vector<Rational> row(static_cast<std::size_t>(d), Rational(0));
    for (int i = 0; i <= pw.rep().degree(); ++i) row[static_cast<std::size_t>(i)] = pw.rep()[i];
    std::vector<Rational> comb(static_cast<std::size_t>(k) + 1, Rational(0));
    comb[static_cast<std::size_t>(k)] = 1;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Rational f = row[static_cast<std::size_t>(pivots[r])];
      if (sgn(f) == 0) continue;
      for (int i = 0; i < d; ++i) row[static_cast<std::size_t>(i)] -= f * basis[r][static_cast<std::size_t>(i)];
      for (std::size_t i = 0; i < combo[r].size(); ++i) comb[i] -= f * combo[r][i];
    }
    int piv = -1;
    for (int i = 0; i < d; ++i)
      if (sgn(row[static_cast<std::size_t>(i)]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return QPoly(comb).monic();
    const Rational inv = 1 / row[static_cast<std::size_t>(piv)];
    for (auto& v : row) v *= inv;
    for (auto& v : comb) v *= inv;
    basis.push_back(std::move(row));
    combo.push_back(std::move(comb));
    pivots.push_back(piv);
    pw = pw * x;
  }
  throw InvariantViolation("no linear dependency among d+1 powers");
}

}  // namespace aode
