#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polyhull/rational.hpp"

namespace polyhull {

/**
 * Element of the field of rational Puiseux fractions in one indeterminate t.
 *
 * A value is a quotient of two finite sums c*t^e with rational coefficients
 * and rational exponents.  The field is ordered by regarding t as a positive
 * infinitesimal: the sign of a value is the sign of the coefficient of its
 * lowest-order term.
 *
 * Normal form: numerator and denominator are coprime, both store their terms
 * by strictly increasing exponent without zero coefficients, and the
 * denominator's lowest term is exactly 1 (coefficient 1, exponent 0).  Two
 * equal values therefore have identical term lists.
 */
class PuiseuxFraction {
 public:
  struct Term {
    Rational exponent;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };
  using Terms = std::vector<Term>;

  PuiseuxFraction() : den_{Term{0, 1}} {}
  PuiseuxFraction(int c) : PuiseuxFraction(Rational(c)) {}
  PuiseuxFraction(long c) : PuiseuxFraction(Rational(c)) {}
  PuiseuxFraction(const Rational& c);
  PuiseuxFraction(Terms numerator, Terms denominator);

  /** The indeterminate t itself. */
  static PuiseuxFraction t() { return monomial(1, 1); }
  static PuiseuxFraction monomial(const Rational& coefficient, const Rational& exponent);

  /** Parses the textual form produced by to_string (spaces are ignored). */
  static PuiseuxFraction parse(std::string_view text);

  const Terms& numerator() const { return num_; }
  const Terms& denominator() const { return den_; }

  int sign() const { return num_.empty() ? 0 : num_.front().coefficient.sign(); }
  bool is_zero() const { return num_.empty(); }
  bool is_constant() const;
  PuiseuxFraction abs() const { return sign() < 0 ? -*this : *this; }
  PuiseuxFraction inverse() const;

  /** Substitutes t = t0.  Only integer exponents are supported. */
  Rational evaluate(const Rational& t0) const;

  /** Compact text, e.g. "1-2*t+t^2" or "(t)/(1-t)". */
  std::string to_string() const;

  PuiseuxFraction& operator+=(const PuiseuxFraction& o);
  PuiseuxFraction& operator-=(const PuiseuxFraction& o);
  PuiseuxFraction& operator*=(const PuiseuxFraction& o);
  PuiseuxFraction& operator/=(const PuiseuxFraction& o);

  friend PuiseuxFraction operator+(PuiseuxFraction a, const PuiseuxFraction& b) { return a += b; }
  friend PuiseuxFraction operator-(PuiseuxFraction a, const PuiseuxFraction& b) { return a -= b; }
  friend PuiseuxFraction operator*(PuiseuxFraction a, const PuiseuxFraction& b) { return a *= b; }
  friend PuiseuxFraction operator/(PuiseuxFraction a, const PuiseuxFraction& b) { return a /= b; }
  friend PuiseuxFraction operator-(const PuiseuxFraction& a);

  friend bool operator==(const PuiseuxFraction& a, const PuiseuxFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const PuiseuxFraction& a, const PuiseuxFraction& b);

 private:
  struct Unnormalized {};
  PuiseuxFraction(Terms numerator, Terms denominator, Unnormalized)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  bool has_unit_denominator() const;
  void normalize();

  Terms num_;
  Terms den_;
};

std::ostream& operator<<(std::ostream& os, const PuiseuxFraction& f);

}  // namespace polyhull
