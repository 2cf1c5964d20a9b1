#include "polyhull/scalar.hpp"

namespace polyhull {

bool make_primitive(std::span<Rational> row) {
  Integer den = 1;
  Integer g = 0;
  bool nonzero = false;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    nonzero = true;
    den = lcm(den, x.denominator());
  }
  if (!nonzero) return false;
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    g = gcd(g, x.numerator() * (den / x.denominator()));
  }
  if (den == 1 && g == 1) return true;
  const Rational factor(den, g);
  for (auto& x : row)
    if (!x.is_zero()) x *= factor;
  return true;
}

bool make_primitive(std::span<PuiseuxFraction> row) {
  for (const auto& x : row) {
    if (x.is_zero()) continue;
    const PuiseuxFraction scale = x.abs();
    if (scale == PuiseuxFraction(1)) return true;
    for (auto& y : row)
      if (!y.is_zero()) y /= scale;
    return true;
  }
  return false;
}

}  // namespace polyhull
