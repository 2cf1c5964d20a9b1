#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "polyhull/errors.hpp"
#include "polyhull/linalg.hpp"

namespace polyhull {

/**
 * Outer description.  Row (a0, a1, ..., ad) of `inequalities` means
 * a0 + a1 x1 + ... + ad xd >= 0, a row of `equations` means the same sum is 0.
 */
template <class S>
struct HRep {
  Matrix<S> inequalities;
  Matrix<S> equations;
  std::size_t ambient_dim = 0;

  HRep() = default;
  explicit HRep(std::size_t d) : inequalities(Matrix<S>::with_cols(d + 1)), equations(Matrix<S>::with_cols(d + 1)), ambient_dim(d) {}
  HRep(Matrix<S> ineq, Matrix<S> eq, std::size_t d) : inequalities(std::move(ineq)), equations(std::move(eq)), ambient_dim(d) {
    if (inequalities.rows() == 0) inequalities = Matrix<S>::with_cols(d + 1);
    if (equations.rows() == 0) equations = Matrix<S>::with_cols(d + 1);
    if (inequalities.cols() != d + 1 || equations.cols() != d + 1) throw DimensionMismatch("H-representation rows must have length d+1");
  }

  friend bool operator==(const HRep&, const HRep&) = default;
};

/**
 * Inner description in homogeneous coordinates: points are rows (1, x),
 * rays and lineality generators are rows (0, v).
 */
template <class S>
struct VRep {
  Matrix<S> points;
  Matrix<S> rays;
  Matrix<S> lineality;
  std::size_t ambient_dim = 0;

  VRep() = default;
  explicit VRep(std::size_t d)
      : points(Matrix<S>::with_cols(d + 1)), rays(Matrix<S>::with_cols(d + 1)), lineality(Matrix<S>::with_cols(d + 1)), ambient_dim(d) {}
  VRep(Matrix<S> pts, Matrix<S> rys, Matrix<S> lin, std::size_t d)
      : points(std::move(pts)), rays(std::move(rys)), lineality(std::move(lin)), ambient_dim(d) {
    if (points.rows() == 0) points = Matrix<S>::with_cols(d + 1);
    if (rays.rows() == 0) rays = Matrix<S>::with_cols(d + 1);
    if (lineality.rows() == 0) lineality = Matrix<S>::with_cols(d + 1);
    if (points.cols() != d + 1 || rays.cols() != d + 1 || lineality.cols() != d + 1)
      throw DimensionMismatch("V-representation rows must have length d+1");
    for (std::size_t i = 0; i < points.rows(); ++i)
      if (points(i, 0) != S(1)) throw InvalidArgument("points must have leading coordinate 1");
    for (std::size_t i = 0; i < rays.rows(); ++i)
      if (!rays(i, 0).is_zero()) throw InvalidArgument("rays must have leading coordinate 0");
    for (std::size_t i = 0; i < lineality.rows(); ++i)
      if (!lineality(i, 0).is_zero()) throw InvalidArgument("lineality generators must have leading coordinate 0");
  }

  /** Bounded point configuration given by affine coordinates, one point per row. */
  static VRep from_affine_points(const std::vector<Vector<S>>& pts, std::size_t d) {
    Matrix<S> m = Matrix<S>::with_cols(d + 1);
    for (const auto& p : pts) {
      if (p.size() != d) throw DimensionMismatch("point has wrong dimension");
      Vector<S> row{S(1)};
      row.insert(row.end(), p.begin(), p.end());
      m.append_row(row);
    }
    return VRep(std::move(m), {}, {}, d);
  }

  bool is_empty() const { return points.rows() == 0; }
  friend bool operator==(const VRep&, const VRep&) = default;
};

/** Homogeneous polyhedral cone, given by generators and/or inequalities. */
template <class S>
struct Cone {
  Matrix<S> rays;
  Matrix<S> lineality;
  Matrix<S> inequalities;
  Matrix<S> equations;
  std::size_t dim = 0;  // ambient dimension of the cone (d+1 for a homogenized d-polyhedron)
  bool has_generators = false;
  bool has_inequalities = false;

  static Cone from_generators(Matrix<S> rays, Matrix<S> lineality, std::size_t dim) {
    Cone c;
    c.dim = dim;
    c.rays = rays.rows() ? std::move(rays) : Matrix<S>::with_cols(dim);
    c.lineality = lineality.rows() ? std::move(lineality) : Matrix<S>::with_cols(dim);
    c.inequalities = Matrix<S>::with_cols(dim);
    c.equations = Matrix<S>::with_cols(dim);
    c.has_generators = true;
    return c;
  }
  static Cone from_inequalities(Matrix<S> ineq, Matrix<S> eq, std::size_t dim) {
    Cone c;
    c.dim = dim;
    c.inequalities = ineq.rows() ? std::move(ineq) : Matrix<S>::with_cols(dim);
    c.equations = eq.rows() ? std::move(eq) : Matrix<S>::with_cols(dim);
    c.rays = Matrix<S>::with_cols(dim);
    c.lineality = Matrix<S>::with_cols(dim);
    c.has_inequalities = true;
    return c;
  }
};

enum class RowKind { inequality, equation };

/**
 * Canonical representative of a nonzero row.  Over the rationals this is the
 * primitive integer vector.  Inequalities keep their orientation; an equation
 * is additionally oriented so that the first nonzero entry of its normal part
 * (entries 1..d) is positive.
 */
template <class S>
Vector<S> canonicalize_row(Vector<S> r, RowKind kind = RowKind::inequality) {
  if (!make_primitive(std::span<S>(r))) throw InvalidArgument("cannot canonicalize the zero row");
  if (kind == RowKind::equation) {
    std::size_t j = r.size() > 1 ? 1 : 0;
    while (j < r.size() && r[j].is_zero()) ++j;
    if (j == r.size()) j = 0;
    while (r[j].is_zero()) ++j;
    if (r[j].sign() < 0)
      for (auto& x : r) x = -x;
  }
  return r;
}

namespace detail {

template <class S>
void sort_unique_rows(std::vector<Vector<S>>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

template <class S>
Matrix<S> to_matrix(const std::vector<Vector<S>>& rows, std::size_t cols) {
  return Matrix<S>::from_rows(rows, cols);
}

/** Column order 1..n-1 followed by 0, so pivots prefer the normal part. */
inline std::vector<std::size_t> normal_first_order(std::size_t cols) {
  std::vector<std::size_t> order;
  for (std::size_t j = 1; j < cols; ++j) order.push_back(j);
  if (cols > 0) order.push_back(0);
  return order;
}

/** Subtracts multiples of the echelon rows so that `v` vanishes at every pivot column. */
template <class S>
void reduce_against(Vector<S>& v, const Echelon<S>& e) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const S f = v[e.pivots[r]];
    if (f.is_zero()) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!e.reduced(r, k).is_zero()) v[k] -= f * e.reduced(r, k);
  }
}

template <class S>
bool is_zero_row(std::span<const S> r) {
  return std::all_of(r.begin(), r.end(), [](const S& x) { return x.is_zero(); });
}

}  // namespace detail

/** The canonical infeasible system: the single inequality -1 >= 0. */
template <class S>
HRep<S> infeasible_hrep(std::size_t d) {
  HRep<S> h(d);
  Vector<S> row(d + 1, S(0));
  row[0] = S(-1);
  h.inequalities.append_row(row);
  return h;
}

template <class S>
bool is_infeasible_marker(const HRep<S>& h) {
  return h.equations.rows() == 0 && h.inequalities.rows() == 1 && h.inequalities(0, 0).sign() < 0 &&
         detail::is_zero_row<S>(h.inequalities.row(0).subspan(1));
}

/**
 * Canonical form of an H-representation: equations in reduced echelon form
 * (pivots taken in the normal part first), every inequality reduced modulo the
 * equations, rows made primitive, duplicates and trivial rows removed and both
 * blocks sorted lexicographically.  An inconsistent system collapses to the
 * infeasible marker.
 */
template <class S>
HRep<S> canonical_hrep(const HRep<S>& h) {
  const std::size_t d = h.ambient_dim, n = d + 1;
  const auto order = detail::normal_first_order(n);
  Echelon<S> eq = echelon(h.equations, order);
  std::vector<Vector<S>> eqs, ineqs;
  for (std::size_t r = 0; r < eq.pivots.size(); ++r) {
    if (eq.pivots[r] == 0) return infeasible_hrep<S>(d);
    eqs.push_back(canonicalize_row(eq.reduced.row_vector(r), RowKind::equation));
  }
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
    Vector<S> v = h.inequalities.row_vector(i);
    detail::reduce_against(v, eq);
    if (detail::is_zero_row<S>(std::span<const S>(v).subspan(1))) {
      if (v[0].sign() < 0) return infeasible_hrep<S>(d);
      continue;
    }
    ineqs.push_back(canonicalize_row(std::move(v)));
  }
  detail::sort_unique_rows(eqs);
  detail::sort_unique_rows(ineqs);
  return HRep<S>(detail::to_matrix(ineqs, n), detail::to_matrix(eqs, n), d);
}

/**
 * Canonical form of a V-representation: lineality in reduced echelon form,
 * points and rays reduced modulo the lineality space, rays made primitive,
 * duplicates removed and rows sorted lexicographically.
 */
template <class S>
VRep<S> canonical_vrep(const VRep<S>& v) {
  const std::size_t n = v.ambient_dim + 1;
  Echelon<S> lin = echelon(v.lineality);
  std::vector<Vector<S>> lins, pts, rays;
  for (std::size_t r = 0; r < lin.pivots.size(); ++r)
    lins.push_back(canonicalize_row(lin.reduced.row_vector(r), RowKind::equation));
  for (std::size_t i = 0; i < v.points.rows(); ++i) {
    Vector<S> p = v.points.row_vector(i);
    detail::reduce_against(p, lin);
    pts.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < v.rays.rows(); ++i) {
    Vector<S> r = v.rays.row_vector(i);
    detail::reduce_against(r, lin);
    if (detail::is_zero_row<S>(r)) continue;
    rays.push_back(canonicalize_row(std::move(r)));
  }
  detail::sort_unique_rows(lins);
  detail::sort_unique_rows(pts);
  detail::sort_unique_rows(rays);
  return VRep<S>(detail::to_matrix(pts, n), detail::to_matrix(rays, n), detail::to_matrix(lins, n), v.ambient_dim);
}

/** Value a0 + <a, x> of a row at an affine point x. */
template <class R, class X>
auto evaluate_row(const R& row, const X& x) {
  auto s = row[0];
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!row[i + 1].is_zero() && !x[i].is_zero()) s += row[i + 1] * x[i];
  return s;
}

/** True iff the affine point x satisfies every inequality and equation exactly. */
template <class S>
bool contains(const HRep<S>& h, std::span<const S> x) {
  if (x.size() != h.ambient_dim) throw DimensionMismatch("point dimension differs from ambient dimension");
  for (std::size_t i = 0; i < h.equations.rows(); ++i)
    if (!evaluate_row(h.equations.row(i), x).is_zero()) return false;
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i)
    if (evaluate_row(h.inequalities.row(i), x).sign() < 0) return false;
  return true;
}

template <class S>
bool contains(const HRep<S>& h, const Vector<S>& x) {
  return contains(h, std::span<const S>(x));
}

/** Equations (canonical, echelon) of the affine hull of the V-data; empty V gives no equations. */
template <class S>
Matrix<S> affine_hull_equations(const VRep<S>& v) {
  const std::size_t n = v.ambient_dim + 1;
  Matrix<S> gens = Matrix<S>::with_cols(n);
  gens.append_rows(v.points);
  gens.append_rows(v.rays);
  gens.append_rows(v.lineality);
  if (gens.rows() == 0) return Matrix<S>::with_cols(n);
  HRep<S> h(Matrix<S>::with_cols(n), kernel(gens), v.ambient_dim);
  return canonical_hrep(h).equations;
}

/**
 * Coordinate chart of an affine subspace given by equations: the subspace is
 * parametrized by the `kept` coordinates (1-based); the remaining coordinates
 * are pivots of the reduced equations and determined by the kept ones.
 */
template <class S>
struct AffineChart {
  std::size_t ambient_dim = 0;
  Matrix<S> equations;
  std::vector<std::size_t> kept;

  explicit AffineChart(std::size_t d, const Matrix<S>& eqs) : ambient_dim(d) {
    const auto order = detail::normal_first_order(d + 1);
    Echelon<S> e = echelon(eqs, order);
    equations = e.reduced;
    std::vector<bool> pivot(d + 1, false);
    for (std::size_t j : e.pivots) pivot[j] = true;
    for (std::size_t j = 1; j <= d; ++j)
      if (!pivot[j]) kept.push_back(j);
  }

  std::size_t dim() const { return kept.size(); }
  bool is_identity() const { return kept.size() == ambient_dim; }

  /** Homogeneous row (x0, x1..xd) -> (x0, x_kept...). */
  Vector<S> restrict_row(std::span<const S> row) const {
    Vector<S> r{row[0]};
    for (std::size_t j : kept) r.push_back(row[j]);
    return r;
  }
  Matrix<S> restrict_rows(const Matrix<S>& m) const {
    Matrix<S> out = Matrix<S>::with_cols(dim() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) out.append_row(restrict_row(m.row(i)));
    return out;
  }
  /** Inequality (b0, b_kept) in chart coordinates -> full row with zeros at the pivots. */
  Vector<S> lift_functional(std::span<const S> row) const {
    Vector<S> r(ambient_dim + 1, S(0));
    r[0] = row[0];
    for (std::size_t i = 0; i < kept.size(); ++i) r[kept[i]] = row[i + 1];
    return r;
  }
  /** Chart point (x0, y) -> full homogeneous point satisfying the equations. */
  Vector<S> lift_point(std::span<const S> row) const {
    Vector<S> r(ambient_dim + 1, S(0));
    r[0] = row[0];
    for (std::size_t i = 0; i < kept.size(); ++i) r[kept[i]] = row[i + 1];
    for (std::size_t e = 0; e < equations.rows(); ++e) {
      // pivot column p: x_p = -(sum over non-pivot entries)
      std::size_t p = 0;
      while (equations(e, p).is_zero() || p == 0) {
        ++p;
        if (p > ambient_dim) break;
      }
      if (p > ambient_dim) continue;
      S s(0);
      for (std::size_t j = 0; j <= ambient_dim; ++j)
        if (j != p && !equations(e, j).is_zero()) s += equations(e, j) * r[j];
      r[p] = -s;
    }
    return r;
  }
};

/** Homogenization: the cone over P x {1}. */
template <class S>
Cone<S> homogenize(const HRep<S>& h) {
  Matrix<S> ineq = h.inequalities;
  Vector<S> far(h.ambient_dim + 1, S(0));
  far[0] = S(1);
  ineq.append_row(far);
  return Cone<S>::from_inequalities(std::move(ineq), h.equations, h.ambient_dim + 1);
}

template <class S>
Cone<S> homogenize(const VRep<S>& v) {
  Matrix<S> rays = v.points;
  rays.append_rows(v.rays);
  return Cone<S>::from_generators(std::move(rays), v.lineality, v.ambient_dim + 1);
}

/** Splits cone generators by leading coordinate into points (rescaled to 1) and rays. */
template <class S>
VRep<S> dehomogenize_generators(const Cone<S>& c) {
  const std::size_t n = c.dim;
  Matrix<S> pts = Matrix<S>::with_cols(n), rays = Matrix<S>::with_cols(n);
  for (std::size_t i = 0; i < c.rays.rows(); ++i) {
    Vector<S> g = c.rays.row_vector(i);
    int s = g[0].sign();
    if (s < 0) throw InvalidArgument("cone generator with negative leading coordinate");
    if (s == 0) {
      rays.append_row(g);
      continue;
    }
    const S inv = S(1) / g[0];
    for (auto& x : g) x *= inv;
    pts.append_row(g);
  }
  for (std::size_t i = 0; i < c.lineality.rows(); ++i)
    if (!c.lineality(i, 0).is_zero()) throw InvalidArgument("lineality generator with nonzero leading coordinate");
  return VRep<S>(std::move(pts), std::move(rays), c.lineality, n - 1);
}

/** Drops the far-face row (1, 0, ..., 0) of a homogenized inequality system. */
template <class S>
HRep<S> dehomogenize_inequalities(const Cone<S>& c) {
  Matrix<S> ineq = Matrix<S>::with_cols(c.dim);
  for (std::size_t i = 0; i < c.inequalities.rows(); ++i) {
    auto r = c.inequalities.row(i);
    if (r[0].sign() > 0 && detail::is_zero_row<S>(r.subspan(1))) continue;
    ineq.append_row(r);
  }
  return HRep<S>(std::move(ineq), c.equations, c.dim - 1);
}

}  // namespace polyhull
