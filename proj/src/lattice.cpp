#include "polyhull/lattice.hpp"

#include <climits>
#include <cstdlib>
#include <set>
#include <string>
#include <thread>

#include "polyhull/hilbert.hpp"

namespace polyhull {

LatticeMethod parse_lattice_method(std::string_view s) {
  if (s == "bbox") return LatticeMethod::bbox;
  if (s == "projection") return LatticeMethod::projection;
  if (s == "hilbert") return LatticeMethod::hilbert;
  if (s == "zero-one" || s == "zero_one") return LatticeMethod::zero_one;
  throw InvalidArgument("unknown lattice method '" + std::string(s) + "'");
}

const char* to_string(LatticeMethod m) {
  switch (m) {
    case LatticeMethod::bbox: return "bbox";
    case LatticeMethod::projection: return "projection";
    case LatticeMethod::hilbert: return "hilbert";
    case LatticeMethod::zero_one: return "zero-one";
  }
  return "bbox";
}

std::optional<std::size_t> default_point_limit(std::size_t d) {
  const char* env = std::getenv("POLYHULL_MEM_LIMIT_BYTES");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  unsigned long long bytes = std::strtoull(env, &end, 10);
  if (*end != '\0') return std::nullopt;
  return static_cast<std::size_t>(bytes / ((d + 1) * 32));
}

namespace {

using Wide = __int128;

// Fixed-width arithmetic is used when every intermediate sum provably fits.
const Integer kSmall = Integer(1) << 40;

bool fits_small(const Integer& z) { return abs(z) < kSmall; }

Wide to_wide(const Integer& z) { return static_cast<Wide>(z.get_si()); }
Integer to_integer(Wide w) {
  if (w >= LONG_MIN && w <= LONG_MAX) return Integer(static_cast<long>(w));
  bool neg = w < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-w) : static_cast<unsigned __int128>(w);
  Integer r = Integer(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += Integer(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFull));
  return neg ? Integer(-r) : r;
}
Integer to_integer(const Integer& z) { return z; }

template <class T>
T convert(const Integer& z) {
  if constexpr (std::is_same_v<T, Wide>)
    return to_wide(z);
  else
    return z;
}

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/** Row scaled by the lcm of its denominators. */
std::vector<Integer> integer_row(std::span<const Rational> r) {
  Integer l = 1;
  for (const auto& x : r) l = lcm(l, x.denominator());
  std::vector<Integer> out;
  for (const auto& x : r) out.push_back(x.numerator() * (l / x.denominator()));
  return out;
}

struct IntegerSystem {
  std::vector<std::vector<Integer>> rows;  // a0 + a.x >= 0
  std::vector<bool> equation;
};

IntegerSystem integer_system(const HRep<Rational>& h) {
  IntegerSystem s;
  for (std::size_t i = 0; i < h.inequalities.rows(); ++i) {
    s.rows.push_back(integer_row(h.inequalities.row(i)));
    s.equation.push_back(false);
  }
  for (std::size_t i = 0; i < h.equations.rows(); ++i) {
    s.rows.push_back(integer_row(h.equations.row(i)));
    s.equation.push_back(true);
  }
  return s;
}

bool system_is_small(const IntegerSystem& s) {
  for (const auto& r : s.rows)
    for (const auto& x : r)
      if (!fits_small(x)) return false;
  return true;
}

LatticePointSet make_set(const std::vector<std::vector<Integer>>& pts, std::size_t d, LatticeMethod m) {
  LatticePointSet out;
  out.method = m;
  out.points = Matrix<Rational>::with_cols(d + 1);
  Vector<Rational> row(d + 1);
  for (const auto& p : pts) {
    row[0] = 1;
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = Rational(p[j]);
    out.points.append_row(row);
  }
  out.count = pts.size();
  return out;
}

void check_limit(std::size_t n, const std::optional<std::size_t>& limit) {
  if (limit && n > *limit) throw PointLimitExceeded(*limit);
}

std::optional<std::size_t> effective_limit(const EnumerationOptions& opt, std::size_t d) {
  return opt.point_limit ? opt.point_limit : default_point_limit(d);
}

// ---------------------------------------------------------------------------
// bounding box

template <class T>
void box_scan(const IntegerSystem& sys, const std::vector<T>& lo, const std::vector<T>& hi, T first_lo, T first_hi,
              std::vector<std::vector<Integer>>& out, const std::optional<std::size_t>& limit) {
  const std::size_t d = lo.size(), m = sys.rows.size();
  std::vector<std::vector<T>> a(m, std::vector<T>(d + 1));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= d; ++j) a[i][j] = convert<T>(sys.rows[i][j]);
  std::vector<T> x(lo);
  x[0] = first_lo;
  std::vector<T> val(m);
  for (std::size_t i = 0; i < m; ++i) {
    val[i] = a[i][0];
    for (std::size_t j = 0; j < d; ++j) val[i] += a[i][j + 1] * x[j];
  }
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) ok = sys.equation[i] ? val[i] == 0 : val[i] >= 0;
    if (ok) {
      std::vector<Integer> p(d);
      for (std::size_t j = 0; j < d; ++j) p[j] = to_integer(x[j]);
      out.push_back(std::move(p));
      check_limit(out.size(), limit);
    }
    std::size_t j = d;
    for (;;) {
      if (j == 0) return;
      --j;
      const T top = j == 0 ? first_hi : hi[j];
      const T bottom = j == 0 ? first_lo : lo[j];
      if (x[j] < top) {
        x[j] += 1;
        for (std::size_t i = 0; i < m; ++i) val[i] += a[i][j + 1];
        break;
      }
      const T span = x[j] - bottom;
      x[j] = bottom;
      for (std::size_t i = 0; i < m; ++i) val[i] -= a[i][j + 1] * span;
    }
  }
}

template <class T>
std::vector<std::vector<Integer>> box_enumerate(const IntegerSystem& sys, const std::vector<Integer>& lo_z, const std::vector<Integer>& hi_z,
                                                unsigned workers, const std::optional<std::size_t>& limit) {
  const std::size_t d = lo_z.size();
  std::vector<T> lo, hi;
  for (std::size_t j = 0; j < d; ++j) {
    lo.push_back(convert<T>(lo_z[j]));
    hi.push_back(convert<T>(hi_z[j]));
  }
  const T width = hi[0] - lo[0] + 1;
  if (workers <= 1 || width < 2) {
    std::vector<std::vector<Integer>> out;
    box_scan<T>(sys, lo, hi, lo[0], hi[0], out, limit);
    return out;
  }
  const T w = T(workers) < width ? T(workers) : width;
  const std::size_t nw = static_cast<std::size_t>(to_integer(w).get_si());
  std::vector<std::vector<std::vector<Integer>>> parts(nw);
  std::vector<std::exception_ptr> errors(nw);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < nw; ++t) {
    T a = lo[0] + width * T(static_cast<long>(t)) / w;
    T b = lo[0] + width * T(static_cast<long>(t + 1)) / w - 1;
    threads.emplace_back([&, t, a, b] {
      try {
        box_scan<T>(sys, lo, hi, a, b, parts[t], limit);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<std::vector<Integer>> out;
  for (auto& part : parts)
    for (auto& p : part) out.push_back(std::move(p));
  check_limit(out.size(), limit);
  return out;
}

void require_bounded(const Polytope<Rational>& p) {
  if (!p.is_bounded()) throw UnboundedError("lattice point enumeration needs a bounded polyhedron");
}

// ---------------------------------------------------------------------------
// projection

template <class T>
void fiber_dfs(const std::vector<std::vector<std::vector<T>>>& levels, std::vector<T>& x, std::size_t k,
               std::vector<std::vector<Integer>>& out, const std::optional<std::size_t>& limit) {
  const std::size_t d = levels.size();
  // levels[k] holds rows over x_1..x_{k+1}
  std::optional<T> lo, hi;
  for (const auto& r : levels[k]) {
    T rest = r[0];
    for (std::size_t j = 0; j < k; ++j) rest += r[j + 1] * x[j];
    const T& c = r[k + 1];
    if (c == 0) {
      if (rest < 0) return;
    } else if (c > 0) {
      T b = ceil_div(T(-rest), c);
      if (!lo || b > *lo) lo = b;
    } else {
      T b = floor_div(rest, T(-c));
      if (!hi || b < *hi) hi = b;
    }
  }
  if (!lo || !hi) throw UnboundedError("unbounded fiber in projection enumeration");
  for (T v = *lo; v <= *hi; v += 1) {
    x[k] = v;
    if (k + 1 == d) {
      std::vector<Integer> p(d);
      for (std::size_t j = 0; j < d; ++j) p[j] = to_integer(x[j]);
      out.push_back(std::move(p));
      check_limit(out.size(), limit);
    } else {
      fiber_dfs(levels, x, k + 1, out, limit);
    }
  }
}

// ---------------------------------------------------------------------------
// zero-one

template <class T>
void zero_one_dfs(const std::vector<std::vector<T>>& a, const std::vector<bool>& eq, const std::vector<std::vector<T>>& pos_suffix,
                  const std::vector<std::vector<T>>& neg_suffix, std::vector<T>& partial, std::vector<int>& x, std::size_t j,
                  std::vector<std::vector<Integer>>& out, const std::optional<std::size_t>& limit) {
  const std::size_t d = x.size(), m = a.size();
  for (std::size_t i = 0; i < m; ++i) {
    // best case completion of the free coordinates j..d-1
    if (partial[i] + pos_suffix[i][j] < 0) return;
    if (eq[i] && partial[i] + neg_suffix[i][j] > 0) return;
  }
  if (j == d) {
    std::vector<Integer> p(d);
    for (std::size_t t = 0; t < d; ++t) p[t] = x[t];
    out.push_back(std::move(p));
    check_limit(out.size(), limit);
    return;
  }
  for (int v : {0, 1}) {
    x[j] = v;
    if (v)
      for (std::size_t i = 0; i < m; ++i) partial[i] += a[i][j + 1];
    zero_one_dfs(a, eq, pos_suffix, neg_suffix, partial, x, j + 1, out, limit);
    if (v)
      for (std::size_t i = 0; i < m; ++i) partial[i] -= a[i][j + 1];
  }
  x[j] = 0;
}

template <class T>
std::vector<std::vector<Integer>> zero_one_run(const IntegerSystem& sys, std::size_t d, const std::optional<std::size_t>& limit) {
  const std::size_t m = sys.rows.size();
  std::vector<std::vector<T>> a(m, std::vector<T>(d + 1)), pos(m, std::vector<T>(d + 1, T(0))), neg(m, std::vector<T>(d + 1, T(0)));
  std::vector<T> partial(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= d; ++j) a[i][j] = convert<T>(sys.rows[i][j]);
    for (std::size_t j = d; j-- > 0;) {
      const T& c = a[i][j + 1];
      pos[i][j] = pos[i][j + 1] + (c > 0 ? c : T(0));
      neg[i][j] = neg[i][j + 1] + (c < 0 ? c : T(0));
    }
    partial[i] = a[i][0];
  }
  std::vector<int> x(d, 0);
  std::vector<std::vector<Integer>> out;
  zero_one_dfs<T>(a, sys.equation, pos, neg, partial, x, 0, out, limit);
  return out;
}

}  // namespace

LatticePointSet enumerate_bbox(const Polytope<Rational>& p, const EnumerationOptions& opt) {
  const std::size_t d = p.ambient_dim();
  const auto& box = p.bounding_box();
  if (box.empty) return make_set({}, d, LatticeMethod::bbox);
  std::vector<Integer> lo, hi;
  for (const auto& [l, u] : box.bounds) {
    if (!l || !u) throw UnboundedError("lattice point enumeration needs a bounded polyhedron");
    lo.push_back(l->ceil());
    hi.push_back(u->floor());
    if (lo.back() > hi.back()) return make_set({}, d, LatticeMethod::bbox);
  }
  IntegerSystem sys = integer_system(p.h());
  const auto limit = effective_limit(opt, d);
  if (d == 0) {
    bool ok = true;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) ok = ok && (sys.equation[i] ? sys.rows[i][0] == 0 : sys.rows[i][0] >= 0);
    return make_set(ok ? std::vector<std::vector<Integer>>{{}} : std::vector<std::vector<Integer>>{}, d, LatticeMethod::bbox);
  }
  bool small = system_is_small(sys) && d < 64;
  for (std::size_t j = 0; j < d && small; ++j) small = fits_small(lo[j]) && fits_small(hi[j]);
  auto pts = small ? box_enumerate<Wide>(sys, lo, hi, opt.workers, limit) : box_enumerate<Integer>(sys, lo, hi, opt.workers, limit);
  return make_set(pts, d, LatticeMethod::bbox);
}

Matrix<Rational> fourier_motzkin_last(const Matrix<Rational>& ineq) {
  const std::size_t n = ineq.cols(), k = n - 1;
  Matrix<Rational> out = Matrix<Rational>::with_cols(n - 1);
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < ineq.rows(); ++i) {
    int s = ineq(i, k).sign();
    if (s > 0)
      pos.push_back(i);
    else if (s < 0)
      neg.push_back(i);
    else
      out.append_row(ineq.row(i).subspan(0, n - 1));
  }
  Vector<Rational> r(n - 1);
  for (std::size_t p : pos)
    for (std::size_t q : neg) {
      const Rational fp = -ineq(q, k), fq = ineq(p, k);
      for (std::size_t j = 0; j + 1 < n; ++j) r[j] = ineq(p, j) * fp + ineq(q, j) * fq;
      if (detail::is_zero_row<Rational>(std::span<const Rational>(r).subspan(1)) && r[0].sign() >= 0) continue;
      make_primitive(std::span<Rational>(r));
      out.append_row(r);
    }
  return out;
}

LatticePointSet enumerate_projection(const Polytope<Rational>& p, const EnumerationOptions& opt) {
  const std::size_t d = p.ambient_dim();
  if (p.is_empty()) return make_set({}, d, LatticeMethod::projection);
  require_bounded(p);
  const Matrix<Rational>& verts = p.v().points;
  const auto limit = effective_limit(opt, d);
  if (d == 0) return make_set({{}}, d, LatticeMethod::projection);

  // systems[k] describes the projection onto x_1..x_{k+1}
  std::vector<Matrix<Rational>> systems(d);
  {
    const HRep<Rational>& h = p.h();
    Matrix<Rational> top = h.inequalities;
    for (std::size_t i = 0; i < h.equations.rows(); ++i) {
      top.append_row(h.equations.row(i));
      Vector<Rational> neg = h.equations.row_vector(i);
      for (auto& x : neg) x = -x;
      top.append_row(neg);
    }
    systems[d - 1] = std::move(top);
  }
  for (std::size_t k = d - 1; k > 0; --k) {
    Matrix<Rational> fm = fourier_motzkin_last(systems[k]);
    Matrix<Rational> proj = Matrix<Rational>::with_cols(k + 1);
    for (std::size_t i = 0; i < verts.rows(); ++i) proj.append_row(verts.row(i).subspan(0, k + 1));
    HRep<Rational> reduced = irredundant_by_points(HRep<Rational>(fm, {}, k), proj);
    Matrix<Rational> rows = reduced.inequalities;
    for (std::size_t i = 0; i < reduced.equations.rows(); ++i) {
      rows.append_row(reduced.equations.row(i));
      Vector<Rational> neg = reduced.equations.row_vector(i);
      for (auto& x : neg) x = -x;
      rows.append_row(neg);
    }
    systems[k - 1] = std::move(rows);
  }

  std::vector<std::vector<std::vector<Integer>>> levels(d);
  bool small = true;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < systems[k].rows(); ++i) {
      levels[k].push_back(integer_row(systems[k].row(i)));
      for (const auto& x : levels[k].back()) small = small && fits_small(x);
    }
  // coordinates are bounded by the vertex box, so they are small whenever the vertices are
  for (std::size_t i = 0; i < verts.rows() && small; ++i)
    for (std::size_t j = 1; j <= d && small; ++j) small = fits_small(verts(i, j).floor()) && fits_small(verts(i, j).ceil());
  std::vector<std::vector<Integer>> out;
  if (small && d < 64) {
    std::vector<std::vector<std::vector<Wide>>> w(d);
    for (std::size_t k = 0; k < d; ++k)
      for (const auto& r : levels[k]) {
        std::vector<Wide> row;
        for (const auto& x : r) row.push_back(to_wide(x));
        w[k].push_back(std::move(row));
      }
    std::vector<Wide> x(d);
    fiber_dfs<Wide>(w, x, 0, out, limit);
  } else {
    std::vector<Integer> x(d);
    fiber_dfs<Integer>(levels, x, 0, out, limit);
  }
  return make_set(out, d, LatticeMethod::projection);
}

LatticePointSet enumerate_zero_one(const HRep<Rational>& h, const EnumerationOptions& opt) {
  const std::size_t d = h.ambient_dim;
  IntegerSystem sys = integer_system(h);
  const auto limit = effective_limit(opt, d);
  auto pts = system_is_small(sys) && d < 64 ? zero_one_run<Wide>(sys, d, limit) : zero_one_run<Integer>(sys, d, limit);
  return make_set(pts, d, LatticeMethod::zero_one);
}

LatticePointSet enumerate(const Polytope<Rational>& p, LatticeMethod method, const EnumerationOptions& opt) {
  switch (method) {
    case LatticeMethod::bbox: return enumerate_bbox(p, opt);
    case LatticeMethod::projection: return enumerate_projection(p, opt);
    case LatticeMethod::hilbert: return enumerate_via_hilbert(p, opt);
    case LatticeMethod::zero_one: return enumerate_zero_one(p.h(), opt);
  }
  throw InvalidArgument("unknown lattice method");
}

std::size_t count(const Polytope<Rational>& p, LatticeMethod method, const EnumerationOptions& opt) {
  return enumerate(p, method, opt).count;
}

Polytope<Rational> integer_hull(const Polytope<Rational>& p, LatticeMethod method, const EnumerationOptions& opt) {
  const std::size_t d = p.ambient_dim();
  LatticePointSet pts = enumerate(p, method, opt);
  if (pts.count == 0) return Polytope<Rational>::from_both(infeasible_hrep<Rational>(d), VRep<Rational>(d));
  // x is never a vertex when x+u and x-u are both lattice points of p
  std::set<std::vector<Integer>> present;
  for (std::size_t i = 0; i < pts.points.rows(); ++i) {
    std::vector<Integer> x;
    for (const auto& c : pts.points.row(i)) x.push_back(c.numerator());
    present.insert(std::move(x));
  }
  std::vector<std::vector<int>> dirs;
  for (std::size_t a = 1; a <= d; ++a) {
    std::vector<int> u(d + 1, 0);
    u[a] = 1;
    dirs.push_back(u);
    for (std::size_t b = a + 1; b <= d; ++b)
      for (int sgn : {1, -1}) {
        u[b] = sgn;
        dirs.push_back(u);
        u[b] = 0;
      }
  }
  Matrix<Rational> kept = Matrix<Rational>::with_cols(d + 1);
  std::vector<Integer> y(d + 1);
  for (const auto& x : present) {
    bool midpoint = false;
    for (std::size_t k = 0; k < dirs.size() && !midpoint; ++k) {
      for (std::size_t j = 0; j <= d; ++j) y[j] = x[j] + dirs[k][j];
      if (!present.count(y)) continue;
      for (std::size_t j = 0; j <= d; ++j) y[j] = x[j] - dirs[k][j];
      midpoint = present.count(y) > 0;
    }
    if (!midpoint) {
      Vector<Rational> r;
      for (const auto& c : x) r.push_back(Rational(c));
      kept.append_row(r);
    }
  }
  VRep<Rational> all(kept, {}, {}, d);
  HRep<Rational> h = facets_of(all);
  VRep<Rational> v = vertices_of(h);
  return Polytope<Rational>::from_both(std::move(h), std::move(v));
}

}  // namespace polyhull
