#pragma once

#include <iosfwd>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "polyhull/representation.hpp"

namespace polyhull {

/**
 * Contents of a `.poly` file.  The header line is `H d` or `V d`; sections
 * INEQ/EQ (H) or PTS/RAYS/LIN (V) follow, each as a `rows cols` line and the
 * rows.  `#` starts a comment.  A token containing `t` switches the whole
 * file to Puiseux coefficients.
 */
template <class S>
struct PolyData {
  bool is_h = true;
  HRep<S> h{0};
  VRep<S> v{0};

  std::size_t ambient_dim() const { return is_h ? h.ambient_dim : v.ambient_dim; }
};

using AnyPolyData = std::variant<PolyData<Rational>, PolyData<PuiseuxFraction>>;

AnyPolyData read_poly(std::istream& in);
AnyPolyData read_poly(std::string_view text);

namespace detail {

template <class S>
void write_section(std::ostream& out, const char* name, const Matrix<S>& m) {
  out << name << '\n' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).to_string();
    out << '\n';
  }
}

}  // namespace detail

template <class S>
void write_poly(std::ostream& out, const HRep<S>& h) {
  out << "H " << h.ambient_dim << '\n';
  detail::write_section(out, "INEQ", h.inequalities);
  detail::write_section(out, "EQ", h.equations);
}

template <class S>
void write_poly(std::ostream& out, const VRep<S>& v) {
  out << "V " << v.ambient_dim << '\n';
  detail::write_section(out, "PTS", v.points);
  detail::write_section(out, "RAYS", v.rays);
  detail::write_section(out, "LIN", v.lineality);
}

template <class S>
void write_poly(std::ostream& out, const PolyData<S>& p) {
  if (p.is_h)
    write_poly(out, p.h);
  else
    write_poly(out, p.v);
}

}  // namespace polyhull
