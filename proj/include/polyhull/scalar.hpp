#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>

#include "polyhull/puiseux.hpp"
#include "polyhull/rational.hpp"

namespace polyhull {

/** Exact ordered field usable as coefficient type of every geometric routine. */
template <class S>
concept OrderedField = std::regular<S> && std::totally_ordered<S> && requires(S a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { b.sign() } -> std::convertible_to<int>;
  { b.is_zero() } -> std::convertible_to<bool>;
  { b.to_string() } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

template <class S>
S parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) { return Rational::parse(text); }

template <>
inline PuiseuxFraction parse_scalar<PuiseuxFraction>(std::string_view text) { return PuiseuxFraction::parse(text); }

template <OrderedField S>
S abs(const S& s) {
  return s.sign() < 0 ? -s : s;
}

/**
 * Rescales a nonzero row by a positive factor into its canonical
 * representative: a primitive integer vector over the rationals, and a row
 * whose first nonzero entry is +1 or -1 over other fields.
 * Returns false for the zero row.
 */
bool make_primitive(std::span<Rational> row);
bool make_primitive(std::span<PuiseuxFraction> row);

}  // namespace polyhull
