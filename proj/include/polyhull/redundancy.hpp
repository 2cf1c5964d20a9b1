#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "polyhull/lp.hpp"
#include "polyhull/representation.hpp"

namespace polyhull {

namespace detail {

/** Full test: is row k of `points` outside conv(other points) + cone(rays)? */
template <class S>
bool is_extreme_full(const Matrix<S>& points, const std::vector<std::size_t>& unique, std::size_t k,
                     const Matrix<S>& rays) {
  const std::size_t n = points.cols();
  const std::size_t cols = unique.size() - 1 + rays.rows();
  Matrix<S> a(n, cols);
  std::size_t c = 0;
  for (std::size_t j : unique) {
    if (j == k) continue;
    for (std::size_t r = 0; r < n; ++r) a(r, c) = points(j, r);
    ++c;
  }
  for (std::size_t j = 0; j < rays.rows(); ++j, ++c)
    for (std::size_t r = 0; r < n; ++r) a(r, c) = rays(j, r);
  return simplex_standard(a, points.row_vector(k), Vector<S>(cols, S(0))).status == LpStatus::infeasible;
}

/**
 * Separates the homogeneous point p from conv(known) with a functional f
 * (f >= 0 on known, f(p) = -1); nullopt when p lies in conv(known).
 */
template <class S>
std::optional<Vector<S>> separate(const Matrix<S>& points, const std::vector<std::size_t>& known, std::span<const S> p) {
  const std::size_t n = points.cols();
  HRep<S> h(n);
  Vector<S> row(n + 1);
  for (std::size_t k : known) {
    row[0] = S(0);
    for (std::size_t j = 0; j < n; ++j) row[j + 1] = points(k, j);
    h.inequalities.append_row(row);
  }
  row[0] = S(1);
  for (std::size_t j = 0; j < n; ++j) row[j + 1] = p[j];
  h.inequalities.append_row(row);
  row[0] = S(0);
  LpResult<S> r = solve_lp(LinearProgram<S>{h, row, Sense::minimize});
  if (r.status != LpStatus::optimal || r.optimal_value->sign() >= 0) return std::nullopt;
  return *r.optimal_vertex;
}

}  // namespace detail

/**
 * Indices of the rows of `points` (homogeneous, leading 1) that are vertices of
 * conv(points) + cone(rays).  Among duplicate rows only the first is kept.
 * A point is dropped iff it is a convex combination of the other points plus
 * a nonnegative combination of the rays.
 *
 * Without rays the test runs against a growing set of certified vertices:
 * when p is separated from them, the lexicographically smallest minimizer of
 * the separating functional over all points is a new vertex.
 */
template <class S>
std::vector<std::size_t> irredundant_points(const Matrix<S>& points, const Matrix<S>& rays = {}) {
  std::vector<std::size_t> unique;
  {
    std::map<Vector<S>, std::size_t> seen;
    for (std::size_t i = 0; i < points.rows(); ++i)
      if (seen.emplace(points.row_vector(i), i).second) unique.push_back(i);
  }
  if (unique.size() <= 1 && rays.rows() == 0) return unique;
  std::vector<std::size_t> kept;
  if (rays.rows() > 0) {
    for (std::size_t k : unique)
      if (detail::is_extreme_full(points, unique, k, rays)) kept.push_back(k);
    return kept;
  }
  auto lex_min_of = [&](auto&& better) {
    std::size_t best = unique.front();
    for (std::size_t k : unique)
      if (better(k, best)) best = k;
    return best;
  };
  std::vector<bool> is_vertex(points.rows(), false);
  std::vector<std::size_t> known{lex_min_of([&](std::size_t a, std::size_t b) { return lex_less(points.row(a), points.row(b)); })};
  is_vertex[known.front()] = true;
  for (std::size_t k : unique) {
    while (!is_vertex[k]) {
      auto f = detail::separate(points, known, points.row(k));
      if (!f) break;
      std::vector<S> val(points.rows());
      for (std::size_t j : unique) val[j] = dot(*f, points.row(j));
      std::size_t q = lex_min_of([&](std::size_t a, std::size_t b) {
        if (val[a] != val[b]) return val[a] < val[b];
        return lex_less(points.row(a), points.row(b));
      });
      if (is_vertex[q]) throw Error("irredundant_points: separation made no progress");
      is_vertex[q] = true;
      known.push_back(q);
    }
  }
  for (std::size_t k : unique)
    if (is_vertex[k]) kept.push_back(k);
  return kept;
}

/**
 * Minimal description of the same set: implicit equations are detected and
 * moved to the equations, then every inequality implied by the remaining
 * ones is dropped.  Infeasible input yields the canonical infeasible marker.
 *
 * Inequalities are tested against a growing set of certified facets.  A
 * witness violating the tested row is joined to a strictly interior point;
 * the first row crossed on that segment is a facet.
 */
template <class S>
HRep<S> irredundant_inequalities(const HRep<S>& h) {
  const std::size_t d = h.ambient_dim;
  if (!is_feasible(h)) return infeasible_hrep<S>(d);
  HRep<S> work = canonical_hrep(h);
  if (is_infeasible_marker(work)) return work;
  auto implicit = implicit_equations(work);
  if (!implicit.empty()) {
    HRep<S> moved(Matrix<S>::with_cols(d + 1), work.equations, d);
    std::vector<bool> is_eq(work.inequalities.rows(), false);
    for (std::size_t i : implicit) is_eq[i] = true;
    for (std::size_t i = 0; i < work.inequalities.rows(); ++i)
      (is_eq[i] ? moved.equations : moved.inequalities).append_row(work.inequalities.row(i));
    work = canonical_hrep(moved);
  }
  const std::size_t m = work.inequalities.rows();
  HRep<S> out(Matrix<S>::with_cols(d + 1), work.equations, d);
  if (m == 0) return out;
  auto z = relative_interior_point(work);
  if (!z) throw Error("irredundant_inequalities: no interior point after removing implicit equations");
  std::vector<S> gz(m);
  for (std::size_t j = 0; j < m; ++j) gz[j] = evaluate_row(work.inequalities.row(j), *z);

  auto implied_by_others = [&](std::size_t i) {
    HRep<S> rest(Matrix<S>::with_cols(d + 1), work.equations, d);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) rest.inequalities.append_row(work.inequalities.row(j));
    LpResult<S> r = solve_lp(LinearProgram<S>{rest, work.inequalities.row_vector(i), Sense::minimize});
    return r.status == LpStatus::optimal && r.optimal_value->sign() >= 0;
  };

  enum class State { unknown, facet, redundant };
  std::vector<State> state(m, State::unknown);
  std::vector<std::size_t> facets;
  for (std::size_t i = 0; i < m; ++i) {
    while (state[i] == State::unknown) {
      HRep<S> sub(Matrix<S>::with_cols(d + 1), work.equations, d);
      for (std::size_t j : facets) sub.inequalities.append_row(work.inequalities.row(j));
      Vector<S> cap = work.inequalities.row_vector(i);
      cap[0] += S(1);
      sub.inequalities.append_row(cap);
      LpResult<S> r = solve_lp(LinearProgram<S>{sub, work.inequalities.row_vector(i), Sense::minimize});
      if (r.status != LpStatus::optimal) throw Error("irredundant_inequalities: bounded LP failed");
      if (r.optimal_value->sign() >= 0) {
        state[i] = State::redundant;
        break;
      }
      // first crossing on the segment from z to the witness x
      const Vector<S>& x = *r.optimal_vertex;
      std::optional<S> best;
      std::vector<std::size_t> hit;
      for (std::size_t j = 0; j < m; ++j) {
        if (state[j] == State::facet) continue;
        S gx = evaluate_row(work.inequalities.row(j), x);
        if (gx.sign() >= 0) continue;
        S t = gz[j] / (gz[j] - gx);
        if (!best || t < *best) {
          best = t;
          hit.assign(1, j);
        } else if (t == *best) {
          hit.push_back(j);
        }
      }
      if (hit.size() == 1) {
        state[hit.front()] = State::facet;
        facets.push_back(hit.front());
        continue;
      }
      // several rows meet at the crossing point: settle them one by one
      bool progress = false;
      for (std::size_t j : hit) {
        if (state[j] != State::unknown) continue;
        if (implied_by_others(j)) {
          state[j] = State::redundant;
        } else {
          state[j] = State::facet;
          facets.push_back(j);
          progress = true;
        }
      }
      if (!progress && state[i] == State::unknown) state[i] = implied_by_others(i) ? State::redundant : State::facet;
      if (state[i] == State::facet && std::find(facets.begin(), facets.end(), i) == facets.end()) facets.push_back(i);
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (state[i] == State::facet) out.inequalities.append_row(work.inequalities.row(i));
  return out;
}

/**
 * Facet-certificate variant for a bounded set whose generating points are
 * known: an inequality valid on all `points` (homogeneous rows) is kept iff
 * the points where it is tight span an affine space of dimension dim-1.
 * Equations are the affine hull of the points.  Faster than one LP per row.
 */
template <class S>
HRep<S> irredundant_by_points(const HRep<S>& h, const Matrix<S>& points) {
  const std::size_t d = h.ambient_dim;
  if (points.rows() == 0) return infeasible_hrep<S>(d);
  VRep<S> v(points, {}, {}, d);
  Matrix<S> eqs = affine_hull_equations(v);
  const std::size_t dim = d - eqs.rows();
  HRep<S> out(Matrix<S>::with_cols(d + 1), eqs, d);
  Echelon<S> ech = echelon(eqs, detail::normal_first_order(d + 1));
  std::vector<Vector<S>> rows;
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
    Matrix<S> tight = Matrix<S>::with_cols(d + 1);
    for (std::size_t p = 0; p < points.rows(); ++p)
      if (dot(h.inequalities.row(i), points.row(p)).is_zero()) tight.append_row(points.row(p));
    if (tight.rows() < dim || tight.rows() == points.rows()) continue;
    if (rank(tight) != dim) continue;
    Vector<S> r = h.inequalities.row_vector(i);
    detail::reduce_against(r, ech);
    rows.push_back(canonicalize_row(std::move(r)));
  }
  detail::sort_unique_rows(rows);
  for (auto& r : rows) out.inequalities.append_row(r);
  return out;
}

}  // namespace polyhull
