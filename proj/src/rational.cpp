#include "polyhull/rational.hpp"

#include <cctype>
#include <ostream>

namespace polyhull {

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!valid_integer(s)) throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Integer Rational::floor() const {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Integer Rational::ceil() const {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

std::size_t Rational::hash() const {
  // Mixing the low limbs is enough: equal values have identical canonical limbs.
  auto limb_hash = [](const mpz_class& z) -> std::size_t {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
    if (mpz_size(z.get_mpz_t()) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) * 0x9E3779B97F4A7C15ull;
    return h ^ static_cast<std::size_t>(sgn(z) + 1);
  };
  std::size_t h = limb_hash(q_.get_num());
  return h ^ (limb_hash(q_.get_den()) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace polyhull
