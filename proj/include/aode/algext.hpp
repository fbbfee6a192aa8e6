#pragma once

#include <exception>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "aode/rational.hpp"
#include "aode/unipoly.hpp"

namespace aode {

// Q[theta]/(modulus) with a monic squarefree modulus. The modulus need not be
// irreducible; arithmetic stays valid and a zero divisor surfaces as a
// SplitRequest (dynamic evaluation).
struct Field {
  QPoly modulus;
  bool irreducible = false;  // proven, lets zero tests skip the gcd
  Integer radicand = 0;      // nonzero iff modulus = theta^2 - radicand
  int degree() const { return modulus.degree(); }
  std::string theta_name() const;  // "sqrt(3)" for quadratic fields, else "a"
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(const QPoly& modulus);
// Q(sqrt(r)), r not a perfect square.
FieldPtr make_quadratic_field(const Integer& r);

// Thrown when an element of `field` is a zero divisor. `factor` is a proper
// monic factor of the modulus; the computation must be rerun in both halves.
class SplitRequest : public std::exception {
 public:
  SplitRequest(FieldPtr f, QPoly g) : field(std::move(f)), factor(std::move(g)) {}
  const char* what() const noexcept override { return "algebraic extension split"; }
  FieldPtr field;
  QPoly factor;
};

// Element of Q (null field) or of an extension field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : v_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(long v) : v_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v) : v_(v) {} // NOLINT(google-explicit-constructor)
  Scalar(FieldPtr f, const QPoly& v);

  static Scalar theta(const FieldPtr& f);

  const FieldPtr& field() const { return f_; }
  const QPoly& rep() const { return v_; }
  bool is_rational() const { return v_.degree() <= 0; }
  Rational rational_value() const;

  bool is_zero_rep() const { return v_.is_zero(); }
  // Zero at every conjugate, nonzero at every conjugate, or SplitRequest.
  bool is_zero_strict() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;

 private:
  FieldPtr f_;
  QPoly v_;
};

inline bool is_zero(const Scalar& a) { return a.is_zero_rep(); }
inline bool is_one(const Scalar& a) { return a.is_rational() && a.rational_value() == 1; }
inline Scalar inverse(const Scalar& a) { return a.inverse(); }
std::string to_string(const Scalar& a);

// Field shared by a and b; throws if they live in two different extensions.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);

// Restriction of `from` to the factor `to_modulus` of its modulus. A linear
// factor maps into Q.
class FieldMap {
 public:
  FieldMap(FieldPtr from, const QPoly& to_modulus);
  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }  // null when the image is Q
  Scalar operator()(const Scalar& x) const;

 private:
  FieldPtr from_;
  FieldPtr to_;
  QPoly factor_;
};

// The two restrictions induced by a split request.
std::pair<FieldMap, FieldMap> split_maps(const SplitRequest& s);

// Characteristic polynomial of x over Q (variable is the returned QPoly's x);
// the minimal polynomial when the field is irreducible.
QPoly minimal_polynomial(const Scalar& x);

}  // namespace aode
