#include "polyhull/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace polyhull {

namespace {

using Terms = PuiseuxFraction::Terms;
using Dense = std::vector<Rational>;  // coefficient of s^i at index i

Terms add_terms(const Terms& a, const Terms& b, bool subtract) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back({b[j].exponent, subtract ? -b[j].coefficient : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? a[i].coefficient - b[j].coefficient : a[i].coefficient + b[j].coefficient;
      if (!c.is_zero()) out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Terms mul_terms(const Terms& a, const Terms& b) {
  if (a.size() == 1 && b.size() == 1)
    return {{a[0].exponent + b[0].exponent, a[0].coefficient * b[0].coefficient}};
  std::map<Rational, Rational> acc;
  for (const auto& x : a)
    for (const auto& y : b) acc[x.exponent + y.exponent] += x.coefficient * y.coefficient;
  Terms out;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back({e, c});
  return out;
}

void trim(Dense& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Polynomial long division over Q: a = q*b + r with deg r < deg b.
void divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational());
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / lead;
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= f * b[k];
    trim(r);
  }
  trim(q);
}

Dense poly_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Dense to_dense(const Terms& t, const Rational& base, const Integer& scale) {
  Rational top = (t.back().exponent - base) * Rational(scale);
  Dense d(static_cast<std::size_t>(top.numerator().get_ui()) + 1);
  for (const auto& term : t) {
    Rational idx = (term.exponent - base) * Rational(scale);
    d[idx.numerator().get_ui()] = term.coefficient;
  }
  return d;
}

Terms from_dense(const Dense& d, const Rational& base, const Integer& scale) {
  Terms t;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) t.push_back({base + Rational(Integer(static_cast<unsigned long>(i)), scale), d[i]});
  return t;
}

std::string exponent_text(const Rational& e) { return e.to_string(); }

std::string terms_text(const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = c.abs();
    if (c.sign() < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (e.is_zero()) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += "t";
    if (e != Rational(1)) out += "^" + exponent_text(e);
  }
  return out;
}

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Terms parse_polynomial() {
    std::map<Rational, Rational> acc;
    bool first = true;
    while (pos_ < s_.size() && s_[pos_] != ')') {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Rational coef(1), exp(0);
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coef = read_rational(false);
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          exp = read_variable();
        }
      } else {
        exp = read_variable();
      }
      acc[exp] += sign < 0 ? -coef : coef;
    }
    if (first) fail("empty polynomial");
    Terms out;
    for (auto& [e, c] : acc)
      if (!c.is_zero()) out.push_back({e, c});
    return out;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool at_end() const { return pos_ == s_.size(); }

 private:
  Rational read_variable() {
    expect('t');
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return read_rational(true);
    }
    return Rational(1);
  }

  Rational read_rational(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    read_digits();
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      read_digits();
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  void read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("malformed Puiseux fraction '" + std::string(s_) + "': " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

Rational power(const Rational& base, const Rational& exponent) {
  // exponent is an integer here
  long e = exponent.numerator().get_si();
  bool invert = e < 0;
  unsigned long n = static_cast<unsigned long>(invert ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), n);
  return invert ? Rational(den, num) : Rational(num, den);
}

Rational evaluate_terms(const Terms& terms, const Rational& t0) {
  Rational sum;
  for (const auto& [e, c] : terms) {
    if (t0.is_zero()) {
      if (e.sign() < 0) throw PoleError("negative exponent evaluated at t = 0");
      if (e.is_zero()) sum += c;
      continue;
    }
    sum += c * power(t0, e);
  }
  return sum;
}

}  // namespace

PuiseuxFraction::PuiseuxFraction(const Rational& c) : den_{Term{0, 1}} {
  if (!c.is_zero()) num_.push_back({0, c});
}

PuiseuxFraction::PuiseuxFraction(Terms numerator, Terms denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  auto tidy = [](Terms& t) {
    std::map<Rational, Rational> acc;
    for (auto& term : t) acc[term.exponent] += term.coefficient;
    t.clear();
    for (auto& [e, c] : acc)
      if (!c.is_zero()) t.push_back({e, c});
  };
  tidy(num_);
  tidy(den_);
  normalize();
}

PuiseuxFraction PuiseuxFraction::monomial(const Rational& coefficient, const Rational& exponent) {
  PuiseuxFraction f;
  if (!coefficient.is_zero()) f.num_.push_back({exponent, coefficient});
  return f;
}

bool PuiseuxFraction::has_unit_denominator() const {
  return den_.size() == 1 && den_[0].exponent.is_zero() && den_[0].coefficient == Rational(1);
}

bool PuiseuxFraction::is_constant() const {
  return has_unit_denominator() && (num_.empty() || (num_.size() == 1 && num_[0].exponent.is_zero()));
}

void PuiseuxFraction::normalize() {
  if (den_.empty()) throw DivisionByZero();
  if (num_.empty()) {
    den_ = {Term{0, 1}};
    return;
  }
  if (den_.size() == 1) {
    const Rational shift = den_[0].exponent;
    const Rational scale = den_[0].coefficient;
    for (auto& term : num_) {
      term.exponent -= shift;
      term.coefficient /= scale;
    }
    den_ = {Term{0, 1}};
    return;
  }
  Integer scale = 1;
  for (const Terms* t : {&num_, &den_})
    for (const auto& term : *t) scale = lcm(scale, term.exponent.denominator());
  const Rational a = num_.front().exponent;
  const Rational b = den_.front().exponent;
  Dense n = to_dense(num_, a, scale);
  Dense d = to_dense(den_, b, scale);
  Dense g = poly_gcd(n, d);
  if (g.size() > 1) {
    Dense q, r;
    divmod(n, g, q, r);
    n = std::move(q);
    divmod(d, g, q, r);
    d = std::move(q);
  }
  const Rational lead = d.front();
  for (auto& c : n) c /= lead;
  for (auto& c : d) c /= lead;
  num_ = from_dense(n, a - b, scale);
  den_ = from_dense(d, Rational(0), scale);
}

PuiseuxFraction PuiseuxFraction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return PuiseuxFraction(den_, num_);
}

PuiseuxFraction& PuiseuxFraction::operator+=(const PuiseuxFraction& o) {
  if (has_unit_denominator() && o.has_unit_denominator()) {
    num_ = add_terms(num_, o.num_, false);
    return *this;
  }
  if (den_ == o.den_) {
    num_ = add_terms(num_, o.num_, false);
  } else {
    num_ = add_terms(mul_terms(num_, o.den_), mul_terms(o.num_, den_), false);
    den_ = mul_terms(den_, o.den_);
  }
  normalize();
  return *this;
}

PuiseuxFraction& PuiseuxFraction::operator-=(const PuiseuxFraction& o) {
  if (has_unit_denominator() && o.has_unit_denominator()) {
    num_ = add_terms(num_, o.num_, true);
    return *this;
  }
  if (den_ == o.den_) {
    num_ = add_terms(num_, o.num_, true);
  } else {
    num_ = add_terms(mul_terms(num_, o.den_), mul_terms(o.num_, den_), true);
    den_ = mul_terms(den_, o.den_);
  }
  normalize();
  return *this;
}

PuiseuxFraction& PuiseuxFraction::operator*=(const PuiseuxFraction& o) {
  if (is_zero() || o.is_zero()) {
    *this = PuiseuxFraction();
    return *this;
  }
  num_ = mul_terms(num_, o.num_);
  if (has_unit_denominator() && o.has_unit_denominator()) return *this;
  den_ = mul_terms(den_, o.den_);
  normalize();
  return *this;
}

PuiseuxFraction& PuiseuxFraction::operator/=(const PuiseuxFraction& o) {
  if (o.is_zero()) throw DivisionByZero();
  if (is_zero()) return *this;
  Terms n = mul_terms(num_, o.den_);
  Terms d = mul_terms(den_, o.num_);
  num_ = std::move(n);
  den_ = std::move(d);
  normalize();
  return *this;
}

PuiseuxFraction operator-(const PuiseuxFraction& a) {
  PuiseuxFraction r = a;
  for (auto& term : r.num_) term.coefficient = -term.coefficient;
  return r;
}

std::strong_ordering operator<=>(const PuiseuxFraction& a, const PuiseuxFraction& b) {
  if (a == b) return std::strong_ordering::equal;
  int s = (a - b).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

Rational PuiseuxFraction::evaluate(const Rational& t0) const {
  for (const Terms* t : {&num_, &den_})
    for (const auto& term : *t)
      if (!term.exponent.is_integer())
        throw UnsupportedEvaluation("evaluation requires integer exponents, found t^" + term.exponent.to_string());
  Rational d = evaluate_terms(den_, t0);
  if (d.is_zero()) throw PoleError("denominator vanishes at t = " + t0.to_string());
  return evaluate_terms(num_, t0) / d;
}

std::string PuiseuxFraction::to_string() const {
  if (has_unit_denominator()) return terms_text(num_);
  return "(" + terms_text(num_) + ")/(" + terms_text(den_) + ")";
}

PuiseuxFraction PuiseuxFraction::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  TermParser p(compact);
  if (!compact.empty() && compact.front() == '(') {
    p.expect('(');
    Terms num = p.parse_polynomial();
    p.expect(')');
    if (p.at_end()) return PuiseuxFraction(num, {Term{0, 1}});
    p.expect('/');
    p.expect('(');
    Terms den = p.parse_polynomial();
    p.expect(')');
    if (!p.at_end()) throw InvalidArgument("trailing characters in '" + compact + "'");
    if (den.empty()) throw DivisionByZero();
    return PuiseuxFraction(num, den);
  }
  Terms num = p.parse_polynomial();
  if (!p.at_end()) throw InvalidArgument("trailing characters in '" + compact + "'");
  return PuiseuxFraction(num, {Term{0, 1}});
}

std::ostream& operator<<(std::ostream& os, const PuiseuxFraction& f) { return os << f.to_string(); }

}  // namespace polyhull
