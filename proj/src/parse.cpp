#include "aode/parse.hpp"

#include <cctype>
#include <sstream>

namespace aode {

namespace {

// Recursive descent over a value policy V providing:
//   value constant(Rational), variable(name, col), add, sub, mul, div(a, b, col), pow(a, k)
template <class V>
class Parser {
 public:
  using T = typename V::value;
  Parser(const std::string& s, V& v, std::size_t line, std::size_t off) : s_(s), v_(v), line_(line), off_(off) {}

  T parse() {
    skip();
    if (i_ >= s_.size()) fail("empty expression");
    T r = expr();
    skip();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) { fail_at(i_, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
    throw InputError(what, line_, off_ + pos + 1);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_primary() {
    skip();
    if (i_ >= s_.size()) return false;
    const char c = s_[i_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  }

  T expr() {
    T acc = term();
    for (;;) {
      if (peek('+')) {
        ++i_;
        acc = v_.add(acc, term());
      } else if (peek('-')) {
        ++i_;
        acc = v_.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  T term() {
    T acc = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        acc = v_.mul(acc, unary());
      } else if (peek('/')) {
        ++i_;
        skip();
        const std::size_t at = i_;
        acc = v_.div(acc, unary(), off_ + at + 1);
      } else if (starts_primary()) {
        acc = v_.mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  T unary() {
    if (peek('-')) {
      ++i_;
      return v_.sub(v_.constant(Rational(0)), unary());
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  T power() {
    T base = primary();
    if (!peek('^')) return base;
    ++i_;
    skip();
    const std::size_t at = i_;
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
      fail("exponent must be a non-negative integer");
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j - i_ > 4) fail_at(at, "exponent too large");
    const int k = std::stoi(s_.substr(i_, j - i_));
    i_ = j;
    return v_.pow(base, k);
  }

  T primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      T r = expr();
      if (!peek(')')) fail("expected ')'");
      ++i_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t at = i_;
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
      std::string name = s_.substr(i_, j - i_);
      i_ = j;
      return v_.variable(name, [&](const std::string& w) { fail_at(at, w); });
    }
    fail(std::string("unexpected '") + c + "'");
  }

  T number() {
    std::size_t j = i_;
    std::string digits;
    std::size_t frac = 0;
    bool dot = false;
    while (j < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[j])) || (s_[j] == '.' && !dot))) {
      if (s_[j] == '.') {
        dot = true;
      } else {
        digits += s_[j];
        if (dot) ++frac;
      }
      ++j;
    }
    if (digits.empty()) fail("malformed number");
    i_ = j;
    Rational r(Integer(digits, 10), Integer(1));
    if (frac) {
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
      r /= Rational(den);
      r.canonicalize();
    }
    return v_.constant(r);
  }

  const std::string& s_;
  V& v_;
  std::size_t line_, off_;
  std::size_t i_ = 0;
};

struct PolyPolicy {
  using value = QMPoly;
  const std::vector<std::string>& vars;
  int n() const { return static_cast<int>(vars.size()); }
  value constant(const Rational& r) const { return QMPoly::constant(n(), r); }
  template <class Fail>
  value variable(const std::string& name, Fail fail) const {
    for (int i = 0; i < n(); ++i)
      if (vars[static_cast<std::size_t>(i)] == name) return QMPoly::variable(n(), i);
    fail("unknown symbol '" + name + "'");
    return value(n());
  }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  value div(const value& a, const value& b, std::size_t col) const {
    if (!b.is_constant()) throw InputError("division by a non-constant polynomial", line, col);
    if (b.is_zero()) throw InputError("division by zero", line, col);
    return inverse(b.constant_term()) * a;
  }
  value pow(const value& a, int k) const { return aode::pow(a, static_cast<unsigned>(k)); }
  std::size_t line = 1;
};

struct RatPolicy {
  using value = QRatFunc;
  const std::string& var;
  value constant(const Rational& r) const { return QRatFunc(QPoly(r)); }
  template <class Fail>
  value variable(const std::string& name, Fail fail) const {
    if (name == var) return QRatFunc(QPoly::x());
    fail("unknown symbol '" + name + "' (expected '" + var + "')");
    return value();
  }
  value add(const value& a, const value& b) const { return a + b; }
  value sub(const value& a, const value& b) const { return a - b; }
  value mul(const value& a, const value& b) const { return a * b; }
  value div(const value& a, const value& b, std::size_t col) const {
    if (b.is_zero()) throw InputError("division by zero", line, col);
    return a / b;
  }
  value pow(const value& a, int k) const {
    value r(QPoly(Rational(1)));
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
  }
  std::size_t line = 1;
};

// Scalar coefficient text; parenthesized when it is a sum.
std::string coeff_text(const Scalar& c) {
  if (c.is_rational()) return c.rational_value().get_str();
  return "(" + to_string(c) + ")";
}
std::string coeff_text(const Rational& c) { return c.get_str(); }

bool negative(const Rational& c) { return sgn(c) < 0; }
bool negative(const Scalar& c) { return c.is_rational() && sgn(c.rational_value()) < 0; }
bool unit(const Rational& c) { return c == 1; }
bool unit(const Scalar& c) { return c.is_rational() && c.rational_value() == 1; }

template <class K>
std::string format_terms(const std::vector<std::pair<std::string, K>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, c0] : terms) {
    K c = c0;
    if (out.empty()) {
      if (negative(c)) {
        out += "-";
        c = -c;
      }
    } else if (negative(c)) {
      out += " - ";
      c = -c;
    } else {
      out += " + ";
    }
    if (mono.empty()) {
      out += coeff_text(c);
    } else if (unit(c)) {
      out += mono;
    } else {
      out += coeff_text(c) + "*" + mono;
    }
  }
  return out;
}

std::string mono_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const unsigned e = m[static_cast<int>(i)];
    if (!e) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

template <class K>
std::string format_multi(const MultiPoly<K>& p, const std::vector<std::string>& vars) {
  std::vector<std::pair<std::string, K>> terms;
  for (const auto& t : p.terms()) terms.emplace_back(mono_text(t.m, vars), t.c);
  return format_terms(terms);
}

template <class K>
std::string format_uni(const UniPoly<K>& p, const std::string& var) {
  std::vector<std::pair<std::string, K>> terms;
  for (int k = p.degree(); k >= 0; --k) {
    const K c = p.coeffs()[static_cast<std::size_t>(k)];
    if (detail::zero_p(c)) continue;
    std::string m = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    terms.emplace_back(m, c);
  }
  return format_terms(terms);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

QMPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars, std::size_t line,
                        std::size_t column_offset) {
  PolyPolicy pol{vars};
  pol.line = line;
  Parser<PolyPolicy> p(text, pol, line, column_offset);
  return p.parse();
}

QRatFunc parse_ratfunc(const std::string& text, const std::string& var, std::size_t line, std::size_t column_offset) {
  RatPolicy pol{var};
  pol.line = line;
  Parser<RatPolicy> p(text, pol, line, column_offset);
  return p.parse();
}

std::string format_polynomial(const QMPoly& p, const std::vector<std::string>& vars) { return format_multi(p, vars); }
std::string format_polynomial(const MultiPoly<Scalar>& p, const std::vector<std::string>& vars) {
  return format_multi(p, vars);
}
std::string format_poly(const QPoly& p, const std::string& var) { return format_uni(p, var); }
std::string format_poly(const UniPoly<Scalar>& p, const std::string& var) { return format_uni(p, var); }

std::pair<QPoly, QPoly> integer_form(const QRatFunc& r) {
  const Integer l = lcm(denominator_lcm(r.num()), denominator_lcm(r.den()));
  QPoly n = Rational(l) * r.num(), d = Rational(l) * r.den();
  Integer g = 0;
  for (const auto& c : n.coeffs()) g = gcd(g, Integer(c.get_num()));
  for (const auto& c : d.coeffs()) g = gcd(g, Integer(c.get_num()));
  if (g != 0 && g != 1) {
    n = Rational(1, 1) / Rational(g) * n;
    d = Rational(1, 1) / Rational(g) * d;
  }
  return {n, d};
}

std::string format_ratfunc(const QRatFunc& r, const std::string& var) {
  auto [n, d] = integer_form(r);
  if (d.degree() == 0 && d[0] == 1) return format_poly(n, var);
  return "(" + format_poly(n, var) + ")/(" + format_poly(d, var) + ")";
}

std::string format_ratfunc(const RatFunc<Scalar>& r, const std::string& var) {
  if (r.den().degree() == 0) return format_poly(r.num(), var);
  return "(" + format_poly(r.num(), var) + ")/(" + format_poly(r.den(), var) + ")";
}

InstanceText parse_instance(const std::string& text) {
  InstanceText out;
  bool have_f = false, have_p1 = false, have_p2 = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    std::size_t lead = 0;
    while (lead < body.size() && std::isspace(static_cast<unsigned char>(body[lead]))) ++lead;
    const std::string rest = body.substr(lead);
    if (rest.rfind("F:", 0) == 0) {
      if (have_f) throw InputError("duplicate 'F:' line", line, lead + 1);
      out.F = parse_polynomial(rest.substr(2), {"y", "z"}, line, lead + 2);
      have_f = true;
      continue;
    }
    const std::size_t eq = rest.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(rest.substr(0, eq));
    if (key == "p1" || key == "p2") {
      QRatFunc r = parse_ratfunc(rest.substr(eq + 1), "t", line, lead + eq + 1);
      (key == "p1" ? out.p1 : out.p2) = r;
      (key == "p1" ? have_p1 : have_p2) = true;
      continue;
    }
    throw InputError("expected 'F: <polynomial>' or 'p1 = ...' / 'p2 = ...'", line, lead + 1);
  }
  if (!have_f) throw InputError("missing 'F:' line", line ? line : 1, 1);
  if (have_p1 != have_p2) throw InputError("parametrization needs both p1 and p2", line, 1);
  out.has_parametrization = have_p1;
  if (out.F.is_constant()) throw InputError("F is constant", 1, 1);
  if (!out.F.depends_on(1)) throw InputError("F does not involve z = y(x+1)", 1, 1);
  return out;
}

std::pair<QRatFunc, QRatFunc> parse_parametrization_file(const std::string& text) {
  QRatFunc p1, p2;
  bool have1 = false, have2 = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string body = raw.substr(0, raw.find('#'));
    if (trim(body).empty()) continue;
    const std::size_t eq = body.find('=');
    const std::string key = eq == std::string::npos ? "" : trim(body.substr(0, eq));
    if (key != "p1" && key != "p2") throw InputError("expected 'p1 = <expr in t>' or 'p2 = <expr in t>'", line, 1);
    QRatFunc r = parse_ratfunc(body.substr(eq + 1), "t", line, eq + 1);
    (key == "p1" ? p1 : p2) = r;
    (key == "p1" ? have1 : have2) = true;
  }
  if (!have1 || !have2) throw InputError("parametrization file needs both p1 and p2", line ? line : 1, 1);
  return {p1, p2};
}

std::string format_instance(const QMPoly& F) { return "F: " + format_polynomial(F, {"y", "z"}) + "\n"; }

}  // namespace aode
