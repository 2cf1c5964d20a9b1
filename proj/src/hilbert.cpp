#include "polyhull/hilbert.hpp"

#include <algorithm>
#include <set>

namespace polyhull {

namespace {

using IntRow = std::vector<Integer>;

bool is_integer_matrix(const Matrix<Rational>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& x : m.row(i))
      if (!x.is_integer()) return false;
  return true;
}

Matrix<Rational> to_matrix(const std::set<IntRow>& rows, std::size_t n) {
  Matrix<Rational> m = Matrix<Rational>::with_cols(n);
  Vector<Rational> r(n);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < n; ++j) r[j] = Rational(row[j]);
    m.append_row(r);
  }
  return m;
}

/**
 * Drops every candidate x for which x - u lies in the cone for another
 * candidate u.  Each candidate is compared through its vector of facet values.
 */
std::set<IntRow> reduce(const std::set<IntRow>& cand, const Matrix<Rational>& facets) {
  std::vector<const IntRow*> items;
  std::vector<std::vector<Rational>> val;
  for (const auto& c : cand) {
    items.push_back(&c);
    std::vector<Rational> v;
    for (std::size_t f = 0; f < facets.rows(); ++f) {
      Rational s = 0;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!facets(f, j).is_zero() && c[j] != 0) s += facets(f, j) * Rational(c[j]);
      v.push_back(s);
    }
    val.push_back(std::move(v));
  }
  std::set<IntRow> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool reducible = false;
    for (std::size_t u = 0; u < items.size() && !reducible; ++u) {
      if (u == i) continue;
      bool below = true;
      for (std::size_t f = 0; f < val[i].size() && below; ++f) below = val[u][f] <= val[i][f];
      reducible = below;
    }
    if (!reducible) out.insert(*items[i]);
  }
  return out;
}

}  // namespace

Matrix<Rational> parallelepiped_points(const Matrix<Rational>& g, std::optional<Integer> max_height) {
  const std::size_t k = g.rows(), n = g.cols();
  if (!is_integer_matrix(g)) throw InvalidArgument("parallelepiped generators must be integer");
  Echelon<Rational> e = echelon(g.transpose());
  // pivot rows of the transpose are the coordinates that determine a point of the span
  if (e.pivots.size() != k) throw InvalidArgument("parallelepiped generators are linearly dependent");
  std::vector<std::size_t> coords = e.pivot_rows;
  std::sort(coords.begin(), coords.end());
  Matrix<Rational> gp(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gp(i, j) = g(i, coords[j]);
  // lambda = z_P * inverse(gp)
  Matrix<Rational> inv(k, k);
  {
    Matrix<Rational> gpt = gp.transpose();
    for (std::size_t i = 0; i < k; ++i) {
      Vector<Rational> ei(k, Rational(0));
      ei[i] = 1;
      auto r = solve(gpt, ei);  // row i of inverse(gp)
      for (std::size_t j = 0; j < k; ++j) inv(i, j) = (*r)[j];
    }
  }
  // caps on lambda from the height bound
  std::vector<Rational> cap(k, Rational(1));
  if (max_height) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g(i, 0).sign() < 0) throw InvalidArgument("negative height generator");
      if (g(i, 0).sign() > 0) cap[i] = std::min(Rational(1), Rational(*max_height) / g(i, 0));
    }
  }
  std::vector<Integer> lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational l = 0, h = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& v = gp(i, j);
      if (v.sign() < 0) l += v * cap[i];
      if (v.sign() > 0) h += v * cap[i];
    }
    lo[j] = l.ceil();
    hi[j] = h.floor();
    if (max_height && coords[j] == 0 && hi[j] > *max_height) hi[j] = *max_height;
  }
  // integer form: D * lambda = z_P * adj with D = common denominator of inv
  Integer den = 1;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& x : inv.row(i)) den = lcm(den, x.denominator());
  std::vector<std::vector<Integer>> adj(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) adj[i][j] = inv(i, j).numerator() * (den / inv(i, j).denominator());
  std::vector<std::vector<Integer>> gi(k, std::vector<Integer>(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) gi[i][j] = g(i, j).numerator();

  std::set<IntRow> found;
  std::vector<Integer> z(lo);
  std::vector<Integer> lam(k, Integer(0));  // D * lambda for the current z
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) lam[j] += z[i] * adj[i][j];
  bool empty_box = false;
  for (std::size_t j = 0; j < k; ++j) empty_box = empty_box || lo[j] > hi[j];
  if (k == 0) empty_box = true;
  IntRow full(n);
  while (!empty_box) {
    bool in = true;
    for (std::size_t i = 0; i < k && in; ++i) in = lam[i] >= 0 && lam[i] < den;
    if (in) {
      bool integral = true;
      for (std::size_t c = 0; c < n && integral; ++c) {
        Integer s = 0;
        for (std::size_t i = 0; i < k; ++i) s += lam[i] * gi[i][c];
        if (!mpz_divisible_p(s.get_mpz_t(), den.get_mpz_t())) integral = false;
        else full[c] = s / den;
      }
      bool zero = std::all_of(full.begin(), full.end(), [](const Integer& x) { return x == 0; });
      if (integral && !zero && (!max_height || full[0] <= *max_height)) found.insert(full);
    }
    std::size_t j = k;
    for (;;) {
      if (j == 0) {
        empty_box = true;
        break;
      }
      --j;
      if (z[j] < hi[j]) {
        z[j] += 1;
        for (std::size_t t = 0; t < k; ++t) lam[t] += adj[j][t];
        break;
      }
      const Integer span = z[j] - lo[j];
      z[j] = lo[j];
      for (std::size_t t = 0; t < k; ++t) lam[t] -= adj[j][t] * span;
    }
  }
  return to_matrix(found, n);
}

HilbertBasis hilbert_basis_simplicial(const Matrix<Rational>& generators) {
  if (!is_integer_matrix(generators)) throw InvalidArgument("generators must be integer");
  if (rank(generators) != generators.rows()) throw InvalidArgument("generators are linearly dependent");
  Cone<Rational> c = Cone<Rational>::from_generators(generators, {}, generators.cols());
  return hilbert_basis(c);
}

HilbertBasis hilbert_basis(const Cone<Rational>& c0, std::optional<Integer> max_height) {
  Cone<Rational> c = c0;
  const std::size_t n = c.dim;
  if (!c.has_generators) {
    auto res = double_description(c.inequalities, c.equations);
    c.rays = res.rays;
    c.lineality = res.lineality;
  }
  if (c.lineality.rows() > 0) throw NotPointedError(c.lineality);
  Matrix<Rational> gens = Matrix<Rational>::with_cols(n);
  for (std::size_t i = 0; i < c.rays.rows(); ++i) {
    Vector<Rational> r = c.rays.row_vector(i);
    if (make_primitive(std::span<Rational>(r))) gens.append_row(r);
  }
  HilbertBasis out{Matrix<Rational>::with_cols(n), gens};
  if (gens.rows() == 0) return out;
  // facet normals of the cone are the extreme rays of its dual
  auto dual = double_description(gens, Matrix<Rational>::with_cols(n));
  // grading: positive on every nonzero element of the cone
  Vector<Rational> grading(n, Rational(0));
  if (max_height) {
    grading[0] = 1;
  } else {
    for (std::size_t f = 0; f < dual.rays.rows(); ++f)
      for (std::size_t j = 0; j < n; ++j) grading[j] += dual.rays(f, j);
  }
  Matrix<Rational> pts = Matrix<Rational>::with_cols(n + 1);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    Rational h = dot(gens.row(i), grading);
    if (h.sign() <= 0) throw InvalidArgument("generator of nonpositive height");
    Vector<Rational> p{Rational(1)};
    for (std::size_t j = 0; j < n; ++j) p.push_back(gens(i, j) / h);
    pts.append_row(p);
  }
  auto tri = beneath_beyond(pts).triangulation;
  std::set<IntRow> cand;
  auto add_row = [&](std::span<const Rational> r) {
    IntRow z;
    for (const auto& x : r) z.push_back(x.numerator());
    if (!max_height || z[0] <= *max_height) cand.insert(std::move(z));
  };
  for (std::size_t i = 0; i < gens.rows(); ++i) add_row(gens.row(i));
  for (std::size_t s = 0; s < tri.size(); ++s) {
    auto idx = tri.simplex(s);
    std::vector<std::size_t> rows(idx.begin(), idx.end());
    Matrix<Rational> par = parallelepiped_points(gens.select_rows(rows), max_height);
    for (std::size_t i = 0; i < par.rows(); ++i) add_row(par.row(i));
  }
  if (max_height && *max_height <= 1) {
    // every nonzero element has height >= 1, so height-1 elements are irreducible
    out.elements = to_matrix(cand, n);
  } else {
    out.elements = to_matrix(reduce(cand, dual.rays), n);
  }
  return out;
}

LatticePointSet enumerate_via_hilbert(const Polytope<Rational>& p, const EnumerationOptions& opt) {
  const std::size_t d = p.ambient_dim();
  LatticePointSet out;
  out.method = LatticeMethod::hilbert;
  out.points = Matrix<Rational>::with_cols(d + 1);
  if (p.is_empty()) return out;
  if (!p.is_bounded()) throw UnboundedError("lattice point enumeration needs a bounded polyhedron");
  Cone<Rational> c = homogenize(VRep<Rational>(p.v().points, {}, {}, d));
  HilbertBasis hb = hilbert_basis(c, Integer(1));
  for (std::size_t i = 0; i < hb.elements.rows(); ++i)
    if (hb.elements(i, 0) == 1) out.points.append_row(hb.elements.row(i));
  out.count = out.points.rows();
  auto limit = opt.point_limit ? opt.point_limit : default_point_limit(d);
  if (limit && out.count > *limit) throw PointLimitExceeded(*limit);
  return out;
}

}  // namespace polyhull
