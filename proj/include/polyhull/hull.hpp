#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "polyhull/lp.hpp"
#include "polyhull/random.hpp"
#include "polyhull/redundancy.hpp"
#include "polyhull/representation.hpp"

namespace polyhull {

// ---------------------------------------------------------------------------
// insertion orders

struct InsertionOrder {
  enum class Kind { given, random, vertices_first, lex };
  Kind kind = Kind::given;
  std::uint64_t seed = 0;

  static InsertionOrder given() { return {}; }
  static InsertionOrder random(std::uint64_t seed) { return {Kind::random, seed}; }
  static InsertionOrder vertices_first() { return {Kind::vertices_first, 0}; }
  static InsertionOrder lex() { return {Kind::lex, 0}; }

  /** given | random:<seed> | vertices-first | lex */
  static InsertionOrder parse(std::string_view s) {
    if (s == "given") return given();
    if (s == "vertices-first") return vertices_first();
    if (s == "lex") return lex();
    if (s.starts_with("random:")) {
      std::string digits(s.substr(7));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("bad random seed in order '" + std::string(s) + "'");
      return random(std::stoull(digits));
    }
    throw InvalidArgument("unknown insertion order '" + std::string(s) + "'");
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::given: return "given";
      case Kind::random: return "random:" + std::to_string(seed);
      case Kind::vertices_first: return "vertices-first";
      case Kind::lex: return "lex";
    }
    return "given";
  }
};

/** Permutation of the row indices of `points` realizing the order. */
template <class S>
std::vector<std::size_t> order_permutation(const Matrix<S>& points, const InsertionOrder& order) {
  std::vector<std::size_t> p(points.rows());
  std::iota(p.begin(), p.end(), 0);
  switch (order.kind) {
    case InsertionOrder::Kind::given:
      break;
    case InsertionOrder::Kind::random:
      p = random_permutation(points.rows(), order.seed);
      break;
    case InsertionOrder::Kind::lex:
      std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return lex_less(points.row(a), points.row(b)); });
      break;
    case InsertionOrder::Kind::vertices_first: {
      std::vector<std::size_t> first = irredundant_points(points);
      std::vector<bool> taken(points.rows(), false);
      for (std::size_t i : first) taken[i] = true;
      for (std::size_t i = 0; i < points.rows(); ++i)
        if (!taken[i]) first.push_back(i);
      p = std::move(first);
      break;
    }
  }
  return p;
}

template <class S>
Matrix<S> apply_order(const Matrix<S>& points, const InsertionOrder& order) {
  auto p = order_permutation(points, order);
  return points.select_rows(p);
}

// ---------------------------------------------------------------------------
// double description

enum class DdRowOrder { given, maxcutoff, lexmin };

struct DdOptions {
  DdRowOrder row_order = DdRowOrder::given;
  bool algebraic_adjacency = false;
};

template <class S>
struct DdResult {
  Matrix<S> rays;
  Matrix<S> lineality;
};

namespace detail {

class BitSet {
 public:
  explicit BitSet(std::size_t bits = 0) : w_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  static BitSet intersect(const BitSet& a, const BitSet& b) {
    BitSet r;
    r.w_.resize(a.w_.size());
    for (std::size_t i = 0; i < a.w_.size(); ++i) r.w_[i] = a.w_[i] & b.w_[i];
    return r;
  }
  /** True iff this is a superset of `s`. */
  bool contains(const BitSet& s) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if ((s.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> w_;
};

template <class S>
struct RayRecord {
  Vector<S> ray;
  BitSet active;
};

}  // namespace detail

/**
 * Extreme rays and lineality of {x : A x >= 0, E x = 0}.  Rows of `ineq` and
 * `eq` are homogeneous constraints on R^n.  The equations are eliminated by
 * passing to a kernel basis, the lineality space is the kernel of the
 * transformed inequalities and the remaining pointed cone is built
 * incrementally from the simplicial cone of a maximal independent row set.
 */
template <class S>
DdResult<S> double_description(const Matrix<S>& ineq, const Matrix<S>& eq, const DdOptions& opt = {}) {
  const std::size_t n = ineq.cols() ? ineq.cols() : eq.cols();
  Matrix<S> basis = eq.rows() ? kernel(eq) : Matrix<S>::identity(n);
  const std::size_t k = basis.rows();
  DdResult<S> out{Matrix<S>::with_cols(n), Matrix<S>::with_cols(n)};
  if (k == 0) return out;
  auto to_x = [&](const Vector<S>& y) {
    Vector<S> x(n, S(0));
    for (std::size_t t = 0; t < k; ++t) {
      if (y[t].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!basis(t, j).is_zero()) x[j] += y[t] * basis(t, j);
    }
    return x;
  };

  const std::size_t m = ineq.rows();
  Matrix<S> a(m, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < k; ++t) a(i, t) = dot(ineq.row(i), basis.row(t));

  Matrix<S> lin = kernel(a);
  for (std::size_t i = 0; i < lin.rows(); ++i) {
    Vector<S> x = to_x(lin.row_vector(i));
    make_primitive(std::span<S>(x));
    out.lineality.append_row(x);
  }

  std::vector<std::size_t> base = independent_rows(a);
  const std::size_t r = base.size();
  if (r == 0) return out;
  std::vector<detail::RayRecord<S>> rays;
  {
    Matrix<S> ab = a.select_rows(base);
    for (std::size_t i = 0; i < r; ++i) {
      Vector<S> e(r, S(0));
      e[i] = S(1);
      auto y = solve(ab, e);
      make_primitive(std::span<S>(*y));
      detail::RayRecord<S> rec{std::move(*y), detail::BitSet(m)};
      for (std::size_t j = 0; j < r; ++j)
        if (j != i) rec.active.set(base[j]);
      rays.push_back(std::move(rec));
    }
  }

  std::vector<bool> done(m, false);
  for (std::size_t i : base) done[i] = true;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < m; ++i)
    if (!done[i]) pending.push_back(i);
  if (opt.row_order == DdRowOrder::lexmin)
    std::stable_sort(pending.begin(), pending.end(), [&](std::size_t x, std::size_t y) { return lex_less(a.row(x), a.row(y)); });
  std::vector<std::size_t> processed(base.begin(), base.end());

  std::vector<S> val;
  while (!pending.empty()) {
    std::size_t pick = 0;
    if (opt.row_order == DdRowOrder::maxcutoff) {
      std::size_t best = 0;
      for (std::size_t c = 0; c < pending.size(); ++c) {
        std::size_t neg = 0;
        for (const auto& rr : rays)
          if (dot(a.row(pending[c]), std::span<const S>(rr.ray)).sign() < 0) ++neg;
        if (c == 0 || neg > best) {
          best = neg;
          pick = c;
        }
      }
    }
    const std::size_t row = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));

    val.assign(rays.size(), S(0));
    std::vector<std::size_t> pos, neg;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      val[j] = dot(a.row(row), std::span<const S>(rays[j].ray));
      int s = val[j].sign();
      if (s > 0)
        pos.push_back(j);
      else if (s < 0)
        neg.push_back(j);
      else
        rays[j].active.set(row);
    }
    processed.push_back(row);
    if (neg.empty()) continue;

    std::vector<detail::RayRecord<S>> next;
    for (std::size_t j = 0; j < rays.size(); ++j)
      if (val[j].sign() >= 0) next.push_back(rays[j]);
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        detail::BitSet z = detail::BitSet::intersect(rays[p].active, rays[q].active);
        if (r >= 2 && z.count() < r - 2) continue;
        bool adjacent = true;
        if (opt.algebraic_adjacency) {
          Matrix<S> rows = Matrix<S>::with_cols(k);
          for (std::size_t t : processed)
            if (t != row && z.test(t)) rows.append_row(a.row(t));
          adjacent = rank(rows) + 2 == r;
        } else {
          for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
            if (o != p && o != q && rays[o].active.contains(z)) adjacent = false;
        }
        if (!adjacent) continue;
        Vector<S> w(k, S(0));
        for (std::size_t t = 0; t < k; ++t) w[t] = val[p] * rays[q].ray[t] - val[q] * rays[p].ray[t];
        make_primitive(std::span<S>(w));
        z.set(row);
        next.push_back({std::move(w), std::move(z)});
      }
    rays = std::move(next);
  }
  for (const auto& rr : rays) {
    Vector<S> x = to_x(rr.ray);
    make_primitive(std::span<S>(x));
    out.rays.append_row(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// beneath and beyond

/** Placing triangulation: simplices index rows of `points` (homogeneous). */
template <class S>
struct Triangulation {
  Matrix<S> points;
  std::size_t dim = 0;                  // simplices have dim+1 vertices
  std::vector<std::uint32_t> vertices;  // flattened simplices
  Matrix<S> facets;                     // outward canonical inequalities of the hull

  std::size_t size() const { return dim + 1 == 0 ? 0 : vertices.size() / (dim + 1); }
  std::span<const std::uint32_t> simplex(std::size_t i) const { return {vertices.data() + i * (dim + 1), dim + 1}; }
};

template <class S>
struct BbResult {
  HRep<S> facets;
  Triangulation<S> triangulation;
};

namespace detail {

struct IndexVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/** Beneath-and-beyond for full-dimensional homogeneous points in R^{D+1}. */
template <class S>
class BeneathBeyond {
 public:
  BeneathBeyond(const Matrix<S>& pts, std::vector<std::uint32_t> ids) : pts_(pts), ids_(std::move(ids)), dim_(pts.cols() - 1) {}

  void run(const std::vector<std::size_t>& order) {
    Matrix<S> ordered = pts_.select_rows(order);
    std::vector<std::size_t> basis = independent_rows(ordered);
    for (auto& b : basis) b = order[b];
    std::vector<std::uint32_t> simplex(basis.begin(), basis.end());
    add_simplex(simplex, npos);
    if (dim_ == 0) return;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<std::uint32_t> face;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) face.push_back(static_cast<std::uint32_t>(basis[j]));
      std::sort(face.begin(), face.end());
      Vector<S> normal = hyperplane(face, npos, static_cast<std::uint32_t>(basis[i]));
      std::size_t f = new_facet(std::move(normal));
      add_boundary(std::move(face), f);
    }
    std::vector<bool> in_basis(pts_.rows(), false);
    for (auto b : basis) in_basis[b] = true;
    for (std::size_t p : order)
      if (!in_basis[p]) insert(static_cast<std::uint32_t>(p));
  }

  Matrix<S> facet_rows() const {
    Matrix<S> m = Matrix<S>::with_cols(dim_ + 1);
    for (const auto& f : facets_)
      if (f.alive) m.append_row(f.normal);
    return m;
  }
  /** Simplices translated through `ids_` into caller indices. */
  std::vector<std::uint32_t> simplices() const {
    std::vector<std::uint32_t> out;
    out.reserve(tri_.size());
    for (auto v : tri_) out.push_back(ids_[v]);
    return out;
  }

 private:
  static constexpr std::uint32_t npos = ~std::uint32_t(0);

  struct Facet {
    Vector<S> normal;
    std::vector<std::uint32_t> boundary;
    bool alive = true;
  };
  struct Boundary {
    std::vector<std::uint32_t> verts;  // sorted, dim_ entries
    std::uint32_t facet;
    bool alive = true;
  };
  using RidgeMap = std::unordered_map<std::vector<std::uint32_t>, std::vector<std::uint32_t>, IndexVectorHash>;

  /** Hyperplane through the points of `face` (plus `extra` when set), positive at `side`. */
  Vector<S> hyperplane(const std::vector<std::uint32_t>& face, std::uint32_t extra, std::uint32_t side) const {
    Matrix<S> m = Matrix<S>::with_cols(dim_ + 1);
    for (auto v : face) m.append_row(pts_.row(v));
    if (extra != npos) m.append_row(pts_.row(extra));
    Matrix<S> k = kernel(m);
    Vector<S> n = k.row_vector(0);
    if (dot(std::span<const S>(n), pts_.row(side)).sign() < 0)
      for (auto& x : n) x = -x;
    make_primitive(std::span<S>(n));
    return n;
  }

  std::size_t new_facet(Vector<S> normal) {
    facets_.push_back({std::move(normal), {}, true});
    return facets_.size() - 1;
  }

  void add_simplex(std::vector<std::uint32_t> s, std::uint32_t p) {
    if (p != npos) s.push_back(p);
    std::sort(s.begin(), s.end());
    tri_.insert(tri_.end(), s.begin(), s.end());
  }

  void add_boundary(std::vector<std::uint32_t> verts, std::size_t facet) {
    const auto id = static_cast<std::uint32_t>(boundary_.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::vector<std::uint32_t> ridge = verts;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
      ridges_[std::move(ridge)].push_back(id);
    }
    facets_[facet].boundary.push_back(id);
    boundary_.push_back({std::move(verts), static_cast<std::uint32_t>(facet), true});
  }

  void remove_boundary(std::uint32_t id) {
    Boundary& b = boundary_[id];
    b.alive = false;
    for (std::size_t i = 0; i < b.verts.size(); ++i) {
      std::vector<std::uint32_t> ridge = b.verts;
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
      auto it = ridges_.find(ridge);
      auto& v = it->second;
      v.erase(std::find(v.begin(), v.end(), id));
      if (v.empty()) ridges_.erase(it);
    }
  }

  struct Horizon {
    std::vector<std::uint32_t> ridge;
    std::uint32_t visible, hidden;  // facet ids
    std::uint32_t opposite;         // vertex of the visible simplex not on the ridge
  };

  void insert(std::uint32_t p) {
    const auto point = pts_.row(p);
    std::vector<int> sign(facets_.size(), 1);
    std::vector<std::uint32_t> visible;
    for (std::size_t f = 0; f < facets_.size(); ++f) {
      if (!facets_[f].alive) continue;
      sign[f] = dot(std::span<const S>(facets_[f].normal), point).sign();
      if (sign[f] < 0) visible.push_back(static_cast<std::uint32_t>(f));
    }
    if (visible.empty()) return;

    std::vector<Horizon> horizon;
    for (auto f : visible)
      for (auto bid : facets_[f].boundary) {
        const Boundary& b = boundary_[bid];
        if (!b.alive) continue;
        add_simplex(b.verts, p);
        for (std::size_t i = 0; i < b.verts.size(); ++i) {
          std::vector<std::uint32_t> ridge = b.verts;
          ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
          const auto& sharing = ridges_.at(ridge);
          for (auto other : sharing) {
            if (other == bid) continue;
            const auto of = boundary_[other].facet;
            if (sign[of] < 0) continue;
            horizon.push_back({std::move(ridge), f, of, b.verts[i]});
            break;
          }
        }
      }

    // one new hyperplane per (visible, hidden) pair, shared by equal normals
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> by_pair;
    std::map<Vector<S>, std::size_t> by_normal;
    std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> created;
    for (auto& h : horizon) {
      std::size_t target;
      if (sign[h.hidden] == 0) {
        target = h.hidden;
      } else {
        auto key = std::make_pair(h.visible, h.hidden);
        auto it = by_pair.find(key);
        if (it != by_pair.end()) {
          target = it->second;
        } else {
          Vector<S> normal = hyperplane(h.ridge, p, h.opposite);
          auto jt = by_normal.find(normal);
          if (jt != by_normal.end()) {
            target = jt->second;
          } else {
            target = new_facet(normal);
            sign.push_back(1);
            by_normal.emplace(std::move(normal), target);
          }
          by_pair.emplace(key, target);
        }
      }
      std::vector<std::uint32_t> verts = std::move(h.ridge);
      verts.push_back(p);
      std::sort(verts.begin(), verts.end());
      created.emplace_back(std::move(verts), target);
    }
    for (auto f : visible) {
      facets_[f].alive = false;
      for (auto bid : facets_[f].boundary)
        if (boundary_[bid].alive) remove_boundary(bid);
      facets_[f].boundary.clear();
      facets_[f].boundary.shrink_to_fit();
    }
    for (auto& [verts, f] : created) add_boundary(std::move(verts), f);
  }

  const Matrix<S>& pts_;
  std::vector<std::uint32_t> ids_;
  std::size_t dim_;
  std::vector<Facet> facets_;
  std::vector<Boundary> boundary_;
  RidgeMap ridges_;
  std::vector<std::uint32_t> tri_;
};

}  // namespace detail

/**
 * Facets of conv(points) and a placing triangulation.  `points` are
 * homogeneous rows (1, x).  Lower-dimensional input is handled in the
 * coordinates of its affine hull and lifted back.
 */
template <class S>
BbResult<S> beneath_beyond(const Matrix<S>& points, const InsertionOrder& order = {}) {
  if (points.rows() == 0) throw InvalidArgument("beneath-and-beyond needs at least one point");
  const std::size_t d = points.cols() - 1;
  for (std::size_t i = 0; i < points.rows(); ++i)
    if (points(i, 0) != S(1)) throw InvalidArgument("beneath-and-beyond expects points with leading coordinate 1");
  VRep<S> v(points, {}, {}, d);
  AffineChart<S> chart(d, affine_hull_equations(v));
  const Matrix<S> local = chart.is_identity() ? points : chart.restrict_rows(points);
  std::vector<std::uint32_t> ids(points.rows());
  std::iota(ids.begin(), ids.end(), 0u);
  detail::BeneathBeyond<S> bb(local, ids);
  bb.run(order_permutation(points, order));

  BbResult<S> out;
  Matrix<S> local_facets = bb.facet_rows();
  HRep<S> h(Matrix<S>::with_cols(d + 1), chart.equations, d);
  for (std::size_t i = 0; i < local_facets.rows(); ++i) h.inequalities.append_row(chart.lift_functional(local_facets.row(i)));
  out.facets = canonical_hrep(h);
  out.triangulation.points = points;
  out.triangulation.dim = chart.dim();
  out.triangulation.vertices = bb.simplices();
  out.triangulation.facets = out.facets.inequalities;
  return out;
}

// ---------------------------------------------------------------------------
// representation conversion

enum class Algorithm { dd, bb };

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "dd") return Algorithm::dd;
  if (s == "bb") return Algorithm::bb;
  throw InvalidArgument("unknown algorithm '" + std::string(s) + "'");
}

struct HullOptions {
  Algorithm algorithm = Algorithm::dd;
  InsertionOrder order;
  DdOptions dd;
};

/** Canonical facet description of the polyhedron generated by `v`. */
template <class S>
HRep<S> facets_of(const VRep<S>& v, const HullOptions& opt = {}) {
  const std::size_t d = v.ambient_dim;
  if (v.is_empty()) return infeasible_hrep<S>(d);
  if (opt.algorithm == Algorithm::bb) {
    if (v.rays.rows() || v.lineality.rows()) throw InvalidArgument("beneath-and-beyond handles bounded point sets only");
    return beneath_beyond(v.points, opt.order).facets;
  }
  Matrix<S> gens = v.points;
  gens.append_rows(v.rays);
  auto res = double_description(gens, v.lineality, opt.dd);
  HRep<S> h(Matrix<S>::with_cols(d + 1), res.lineality, d);
  for (std::size_t i = 0; i < res.rays.rows(); ++i) {
    auto r = res.rays.row(i);
    if (r[0].sign() > 0 && detail::is_zero_row<S>(r.subspan(1))) continue;  // far face
    h.inequalities.append_row(r);
  }
  return canonical_hrep(h);
}

namespace detail {

/** Vertices of a bounded H-polytope through the polar point set and beneath-and-beyond. */
template <class S>
VRep<S> vertices_by_polarity(const HRep<S>& h0, const InsertionOrder& order) {
  const std::size_t d = h0.ambient_dim;
  HRep<S> h = canonical_hrep(h0);
  if (is_infeasible_marker(h) || !is_feasible(h)) return VRep<S>(d);
  auto implicit = implicit_equations(h);
  HRep<S> full(Matrix<S>::with_cols(d + 1), h.equations, d);
  {
    std::vector<bool> is_eq(h.inequalities.rows(), false);
    for (auto i : implicit) is_eq[i] = true;
    for (std::size_t i = 0; i < h.inequalities.rows(); ++i)
      (is_eq[i] ? full.equations : full.inequalities).append_row(h.inequalities.row(i));
  }
  AffineChart<S> chart(d, full.equations);
  const std::size_t D = chart.dim();
  // lifted images of the chart origin and unit directions
  std::vector<Vector<S>> lift_cols;
  for (std::size_t j = 0; j <= D; ++j) {
    Vector<S> e(D + 1, S(0));
    e[j] = S(1);
    lift_cols.push_back(chart.lift_point(std::span<const S>(e)));
  }
  HRep<S> local(D);
  for (std::size_t i = 0; i < full.inequalities.rows(); ++i) {
    Vector<S> r(D + 1);
    for (std::size_t j = 0; j <= D; ++j) r[j] = dot(full.inequalities.row(i), std::span<const S>(lift_cols[j]));
    if (detail::is_zero_row<S>(std::span<const S>(r).subspan(1))) continue;
    local.inequalities.append_row(r);
  }
  VRep<S> out(d);
  if (D == 0) {
    out.points.append_row(lift_cols[0]);
    return out;
  }
  auto omega = relative_interior_point(local);
  if (!omega) throw InvalidArgument("no interior point found for polarity");
  Matrix<S> polar = Matrix<S>::with_cols(D + 1);
  for (std::size_t i = 0; i < local.inequalities.rows(); ++i) {
    auto r = local.inequalities.row(i);
    const S beta = evaluate_row(r, std::span<const S>(*omega));
    Vector<S> u{S(1)};
    for (std::size_t j = 1; j <= D; ++j) u.push_back(-r[j] / beta);
    polar.append_row(u);
  }
  auto res = beneath_beyond(polar, order);
  if (res.facets.equations.rows() || is_infeasible_marker(res.facets)) throw UnboundedError("beneath-and-beyond vertex enumeration needs a bounded polytope");
  for (std::size_t i = 0; i < res.facets.inequalities.rows(); ++i) {
    auto c = res.facets.inequalities.row(i);
    if (c[0].sign() <= 0) throw UnboundedError("beneath-and-beyond vertex enumeration needs a bounded polytope");
    Vector<S> y{S(1)};
    for (std::size_t j = 1; j <= D; ++j) y.push_back((*omega)[j - 1] - c[j] / c[0]);
    out.points.append_row(chart.lift_point(std::span<const S>(y)));
  }
  return out;
}

}  // namespace detail

/** Canonical V-description (vertices, rays, lineality) of an H-described polyhedron. */
template <class S>
VRep<S> vertices_of(const HRep<S>& h, const HullOptions& opt = {}) {
  const std::size_t d = h.ambient_dim;
  if (opt.algorithm == Algorithm::bb) return canonical_vrep(detail::vertices_by_polarity(h, opt.order));
  Cone<S> c = homogenize(h);
  auto res = double_description(c.inequalities, c.equations, opt.dd);
  Cone<S> g = Cone<S>::from_generators(res.rays, res.lineality, d + 1);
  VRep<S> v = dehomogenize_generators(g);
  if (v.points.rows() == 0) return VRep<S>(d);
  return canonical_vrep(v);
}

/**
 * Volume of a bounded polytope in the dimension of its affine hull,
 * measured in the coordinates of the affine chart.
 */
template <class S>
S volume_of(const VRep<S>& v, const InsertionOrder& order = {}) {
  if (v.rays.rows() || v.lineality.rows()) throw UnboundedError("volume of an unbounded polyhedron");
  if (v.is_empty()) return S(0);
  const std::size_t d = v.ambient_dim;
  AffineChart<S> chart(d, affine_hull_equations(v));
  Matrix<S> local = chart.restrict_rows(v.points);
  auto res = beneath_beyond(local, order);
  const auto& tri = res.triangulation;
  const std::size_t D = tri.dim;
  S sum(0);
  for (std::size_t s = 0; s < tri.size(); ++s) {
    auto idx = tri.simplex(s);
    Matrix<S> m = Matrix<S>::with_cols(D + 1);
    for (auto i : idx) m.append_row(local.row(i));
    sum += abs(det(m));
  }
  Integer fact = 1;
  for (std::size_t i = 2; i <= D; ++i) fact *= static_cast<unsigned long>(i);
  return sum / S(Rational(fact));
}

}  // namespace polyhull
