#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polyhull/linalg.hpp"
#include "polyhull/representation.hpp"

namespace polyhull {

enum class Sense { maximize, minimize };
enum class LpStatus { optimal, infeasible, unbounded };

/** Optimize c0 + c1 x1 + ... + cd xd over an H-described region. */
template <class S>
struct LinearProgram {
  HRep<S> region;
  Vector<S> objective;
  Sense sense = Sense::maximize;
};

template <class S>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<Vector<S>> optimal_vertex;  // affine coordinates, length d
  std::optional<S> optimal_value;
};

namespace detail {

template <class S>
struct StandardResult {
  LpStatus status;
  Vector<S> z;
};

/**
 * Dense two-phase tableau simplex for  min c.z  s.t.  A z = b, z >= 0.
 * Bland's rule selects entering and leaving variables.
 */
template <class S>
class Tableau {
 public:
  Tableau(const Matrix<S>& a, Vector<S> b) : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), t_((m_ + 1) * width_, S(0)) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = b[i].sign() < 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (!a(i, j).is_zero()) at(i, j) = flip ? -a(i, j) : a(i, j);
      at(i, n_ + i) = S(1);
      at(i, rhs()) = flip ? -b[i] : b[i];
      basis_.push_back(n_ + i);
    }
    active_ = std::vector<bool>(m_, true);
  }

  StandardResult<S> run(const Vector<S>& c) {
    // phase I: minimize the sum of artificials
    for (std::size_t j = 0; j < width_; ++j) {
      if (j >= n_ && j < n_ + m_) continue;
      S s(0);
      for (std::size_t i = 0; i < m_; ++i)
        if (!at(i, j).is_zero()) s -= at(i, j);
      at(m_, j) = s;
    }
    iterate(n_ + m_);
    if (at(m_, rhs()).sign() < 0) return {LpStatus::infeasible, {}};
    // drive remaining artificials out of the basis
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t j = 0;
      while (j < n_ && at(i, j).is_zero()) ++j;
      if (j < n_)
        pivot(i, j);
      else
        active_[i] = false;  // redundant row
    }
    // phase II
    for (std::size_t j = 0; j < width_; ++j) at(m_, j) = S(0);
    for (std::size_t j = 0; j < n_; ++j) at(m_, j) = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const S cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j < width_; ++j)
        if (!at(i, j).is_zero()) at(m_, j) -= cb * at(i, j);
    }
    if (!iterate(n_)) return {LpStatus::unbounded, {}};
    Vector<S> z(n_, S(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) z[basis_[i]] = at(i, rhs());
    return {LpStatus::optimal, std::move(z)};
  }

 private:
  S& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  std::size_t rhs() const { return width_ - 1; }

  /** Runs simplex steps over columns [0, limit); false when unbounded. */
  bool iterate(std::size_t limit) {
    for (;;) {
      std::size_t e = 0;
      while (e < limit && at(m_, e).sign() >= 0) ++e;
      if (e == limit) return true;
      std::size_t leave = m_;
      S best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || at(i, e).sign() <= 0) continue;
        S ratio = at(i, rhs()) / at(i, e);
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, e);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const S inv = S(1) / at(r, c);
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width_; ++j)
      if (!at(r, j).is_zero()) {
        at(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || (i < m_ && !active_[i])) continue;
      const S f = at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j : nz) at(i, j) -= f * at(r, j);
    }
    basis_[r] = c;
  }

  std::size_t m_, n_, width_;
  std::vector<S> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
};

template <class S>
StandardResult<S> simplex_standard(const Matrix<S>& a, const Vector<S>& b, const Vector<S>& c) {
  Tableau<S> t(a, b);
  return t.run(c);
}

/**
 * Moves an optimal point along directions orthogonal to the objective until
 * the tight constraints have full rank, so that the result is a vertex.
 * Leaves the point unchanged when the region has a nontrivial lineality space.
 */
template <class S>
Vector<S> purify_to_vertex(const HRep<S>& h, const Vector<S>& objective, Vector<S> x) {
  const std::size_t d = h.ambient_dim;
  for (;;) {
    Matrix<S> tight = Matrix<S>::with_cols(d);
    auto add_normal = [&](std::span<const S> r) { tight.append_row(r.subspan(1)); };
    for (std::size_t i = 0; i < h.equations.rows(); ++i) add_normal(h.equations.row(i));
    std::vector<S> slack(h.inequalities.rows());
    for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
      slack[i] = evaluate_row(h.inequalities.row(i), std::span<const S>(x));
      if (slack[i].is_zero()) add_normal(h.inequalities.row(i));
    }
    Vector<S> c(objective.begin() + 1, objective.end());
    tight.append_row(c);
    Matrix<S> k = kernel(tight);
    // at an optimum every direction along the tight face is orthogonal to c
    if (k.rows() == 0) return x;
    Vector<S> u = k.row_vector(0);
    bool moved = false;
    for (int dir : {1, -1}) {
      std::optional<S> step;
      for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
        if (slack[i].is_zero()) continue;
        S au = dot(h.inequalities.row(i).subspan(1), std::span<const S>(u));
        if (dir < 0) au = -au;
        if (au.sign() >= 0) continue;
        S s = slack[i] / -au;
        if (!step || s < *step) step = s;
      }
      if (!step) continue;
      const S f = dir > 0 ? *step : -*step;
      for (std::size_t j = 0; j < d; ++j) x[j] += f * u[j];
      moved = true;
      break;
    }
    if (!moved) return x;
  }
}

}  // namespace detail

/**
 * Exact primal simplex.  Free variables are split into differences of
 * nonnegative ones and every inequality gets a slack; the basic optimum is
 * then pushed to a vertex of the region.
 */
template <class S>
LpResult<S> solve_lp(const LinearProgram<S>& lp) {
  const HRep<S>& h = lp.region;
  const std::size_t d = h.ambient_dim;
  if (lp.objective.size() != d + 1) throw DimensionMismatch("objective must have length d+1");
  const std::size_t mi = h.inequalities.rows(), me = h.equations.rows();
  const std::size_t n = 2 * d + mi;
  Matrix<S> a(mi + me, n);
  Vector<S> b(mi + me, S(0));
  for (std::size_t i = 0; i < mi; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const S& v = h.inequalities(i, j + 1);
      if (v.is_zero()) continue;
      a(i, j) = v;
      a(i, d + j) = -v;
    }
    a(i, 2 * d + i) = S(-1);
    b[i] = -h.inequalities(i, 0);
  }
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const S& v = h.equations(i, j + 1);
      if (v.is_zero()) continue;
      a(mi + i, j) = v;
      a(mi + i, d + j) = -v;
    }
    b[mi + i] = -h.equations(i, 0);
  }
  Vector<S> c(n, S(0));
  for (std::size_t j = 0; j < d; ++j) {
    S cj = lp.sense == Sense::maximize ? -lp.objective[j + 1] : lp.objective[j + 1];
    c[j] = cj;
    c[d + j] = -cj;
  }
  auto res = detail::simplex_standard(a, b, c);
  LpResult<S> out;
  out.status = res.status;
  if (res.status != LpStatus::optimal) return out;
  Vector<S> x(d);
  for (std::size_t j = 0; j < d; ++j) x[j] = res.z[j] - res.z[d + j];
  x = detail::purify_to_vertex(h, lp.objective, std::move(x));
  out.optimal_value = evaluate_row(std::span<const S>(lp.objective), std::span<const S>(x));
  out.optimal_vertex = std::move(x);
  return out;
}

template <class S>
struct CoordinateBounds {
  bool empty = false;
  std::vector<std::pair<std::optional<S>, std::optional<S>>> bounds;
};

/** Per-coordinate minimum and maximum over the region (nullopt when unbounded). */
template <class S>
CoordinateBounds<S> coordinate_bounds(const HRep<S>& h) {
  CoordinateBounds<S> out;
  const std::size_t d = h.ambient_dim;
  for (std::size_t j = 0; j < d; ++j) {
    Vector<S> c(d + 1, S(0));
    c[j + 1] = S(1);
    std::pair<std::optional<S>, std::optional<S>> range;
    for (Sense s : {Sense::minimize, Sense::maximize}) {
      LpResult<S> r = solve_lp(LinearProgram<S>{h, c, s});
      if (r.status == LpStatus::infeasible) {
        out.empty = true;
        out.bounds.clear();
        return out;
      }
      if (r.status == LpStatus::optimal) (s == Sense::minimize ? range.first : range.second) = r.optimal_value;
    }
    out.bounds.push_back(std::move(range));
  }
  if (d == 0) {
    LpResult<S> r = solve_lp(LinearProgram<S>{h, Vector<S>{S(0)}, Sense::maximize});
    out.empty = r.status == LpStatus::infeasible;
  }
  return out;
}

/** True iff the region is nonempty. */
template <class S>
bool is_feasible(const HRep<S>& h) {
  return solve_lp(LinearProgram<S>{h, Vector<S>(h.ambient_dim + 1, S(0)), Sense::maximize}).status != LpStatus::infeasible;
}

template <class S>
std::optional<Vector<S>> relative_interior_point(const HRep<S>& h);

/**
 * Indices of inequalities that hold with equality on the whole (nonempty)
 * region.
 */
template <class S>
std::vector<std::size_t> implicit_equations(const HRep<S>& h) {
  std::vector<std::size_t> out;
  if (relative_interior_point(h)) return out;
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
    LpResult<S> r = solve_lp(LinearProgram<S>{h, h.inequalities.row_vector(i), Sense::maximize});
    if (r.status == LpStatus::optimal && r.optimal_value->is_zero()) out.push_back(i);
  }
  return out;
}

/**
 * A point of the relative interior of a nonempty region whose inequalities
 * contain no implicit equations: maximizes the minimum slack, capped at 1.
 */
template <class S>
std::optional<Vector<S>> relative_interior_point(const HRep<S>& h) {
  const std::size_t d = h.ambient_dim;
  HRep<S> lifted(d + 1);
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
    Vector<S> r = h.inequalities.row_vector(i);
    r.push_back(S(-1));
    lifted.inequalities.append_row(r);
  }
  Vector<S> cap(d + 2, S(0));
  cap[0] = S(1);
  cap[d + 1] = S(-1);
  lifted.inequalities.append_row(cap);
  for (std::size_t i = 0; i < h.equations.rows(); ++i) {
    Vector<S> r = h.equations.row_vector(i);
    r.push_back(S(0));
    lifted.equations.append_row(r);
  }
  Vector<S> obj(d + 2, S(0));
  obj[d + 1] = S(1);
  LpResult<S> r = solve_lp(LinearProgram<S>{lifted, obj, Sense::maximize});
  if (r.status != LpStatus::optimal || r.optimal_value->sign() <= 0) return std::nullopt;
  Vector<S> x(r.optimal_vertex->begin(), r.optimal_vertex->begin() + d);
  return x;
}

}  // namespace polyhull
