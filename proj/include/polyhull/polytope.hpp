#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "polyhull/hull.hpp"

namespace polyhull {

/**
 * A polyhedron with lazily paired H- and V-descriptions.  Missing
 * descriptions and derived data are computed on first use (double
 * description) under a mutex; copies share the cache.
 */
template <class S>
class Polytope {
 public:
  static Polytope from_h(HRep<S> h) {
    Polytope p(h.ambient_dim);
    p.s_->h = std::move(h);
    return p;
  }
  static Polytope from_v(VRep<S> v) {
    Polytope p(v.ambient_dim);
    p.s_->v = std::move(v);
    return p;
  }
  static Polytope from_both(HRep<S> h, VRep<S> v) {
    if (h.ambient_dim != v.ambient_dim) throw DimensionMismatch("H and V descriptions of different dimension");
    Polytope p(h.ambient_dim);
    p.s_->h = std::move(h);
    p.s_->v = std::move(v);
    return p;
  }

  std::size_t ambient_dim() const { return d_; }
  bool has_h() const {
    std::lock_guard lock(s_->m);
    return s_->h.has_value();
  }
  bool has_v() const {
    std::lock_guard lock(s_->m);
    return s_->v.has_value();
  }

  const HRep<S>& h() const {
    std::lock_guard lock(s_->m);
    if (!s_->h) s_->h = facets_of(*s_->v);
    return *s_->h;
  }
  const VRep<S>& v() const {
    std::lock_guard lock(s_->m);
    if (!s_->v) s_->v = vertices_of(*s_->h);
    return *s_->v;
  }

  /** Dimension of the affine hull, -1 when empty. */
  int dimension() const {
    {
      std::lock_guard lock(s_->m);
      if (s_->dim) return *s_->dim;
    }
    const VRep<S>& vr = v();
    int dim = vr.is_empty() ? -1 : static_cast<int>(d_) - static_cast<int>(affine_hull_equations(vr).rows());
    std::lock_guard lock(s_->m);
    s_->dim = dim;
    return dim;
  }

  bool is_empty() const { return dimension() < 0; }

  bool is_bounded() const {
    const VRep<S>& vr = v();
    return vr.rays.rows() == 0 && vr.lineality.rows() == 0;
  }

  /** Per-coordinate bounds; taken from the points when a V-description is present. */
  const CoordinateBounds<S>& bounding_box() const {
    {
      std::lock_guard lock(s_->m);
      if (s_->bbox) return *s_->bbox;
    }
    CoordinateBounds<S> b;
    bool use_v;
    {
      std::lock_guard lock(s_->m);
      use_v = s_->v.has_value();
    }
    if (use_v) {
      const VRep<S>& vr = v();
      b.empty = vr.is_empty();
      if (!b.empty)
        for (std::size_t j = 1; j <= d_; ++j) {
          std::optional<S> lo = vr.points(0, j), hi = vr.points(0, j);
          for (std::size_t i = 1; i < vr.points.rows(); ++i) {
            if (vr.points(i, j) < *lo) lo = vr.points(i, j);
            if (vr.points(i, j) > *hi) hi = vr.points(i, j);
          }
          for (std::size_t i = 0; i < vr.rays.rows(); ++i) {
            if (vr.rays(i, j).sign() < 0) lo.reset();
            if (vr.rays(i, j).sign() > 0) hi.reset();
          }
          for (std::size_t i = 0; i < vr.lineality.rows(); ++i)
            if (!vr.lineality(i, j).is_zero()) lo.reset(), hi.reset();
          b.bounds.emplace_back(lo, hi);
        }
    } else {
      b = coordinate_bounds(h());
    }
    std::lock_guard lock(s_->m);
    if (!s_->bbox) s_->bbox = std::move(b);
    return *s_->bbox;
  }

 private:
  struct State {
    std::mutex m;
    std::optional<HRep<S>> h;
    std::optional<VRep<S>> v;
    std::optional<int> dim;
    std::optional<CoordinateBounds<S>> bbox;
  };

  explicit Polytope(std::size_t d) : d_(d), s_(std::make_shared<State>()) {}

  std::size_t d_;
  std::shared_ptr<State> s_;
};

template <class S>
int dimension(const Polytope<S>& p) {
  return p.dimension();
}

template <class S>
bool contains(const Polytope<S>& p, const Vector<S>& x) {
  return contains(p.h(), x);
}

template <class S>
HRep<S> facets(const Polytope<S>& p, const HullOptions& opt = {}) {
  return facets_of(p.v(), opt);
}

template <class S>
VRep<S> vertices(const Polytope<S>& p, const HullOptions& opt = {}) {
  if (p.has_h()) return vertices_of(p.h(), opt);
  // reduce a V-description to its vertices through the facets
  return vertices_of(facets_of(p.v(), opt), opt);
}

template <class S>
S volume(const Polytope<S>& p, const InsertionOrder& order = {}) {
  return volume_of(p.v(), order);
}

template <class S>
Cone<S> homogenize(const Polytope<S>& p) {
  return p.has_v() ? homogenize(p.v()) : homogenize(p.h());
}

/** Inverse of homogenize: generator cones give V-data, inequality cones H-data. */
template <class S>
Polytope<S> dehomogenize(const Cone<S>& c) {
  if (c.has_generators && c.has_inequalities)
    return Polytope<S>::from_both(dehomogenize_inequalities(c), dehomogenize_generators(c));
  if (c.has_generators) return Polytope<S>::from_v(dehomogenize_generators(c));
  return Polytope<S>::from_h(dehomogenize_inequalities(c));
}

}  // namespace polyhull
