#include "doctest.h"
#include "oracles.hpp"
#include "polyhull/gen.hpp"
#include "polyhull/polytope.hpp"

using namespace polyhull;
using Q = Rational;
using P = PuiseuxFraction;

namespace {

HRep<Q> cube_h(std::size_t d) {
  HRep<Q> h(d);
  for (std::size_t j = 1; j <= d; ++j) {
    Vector<Q> a(d + 1, Q(0)), b(d + 1, Q(0));
    a[j] = 1;
    b[0] = 1;
    b[j] = -1;
    h.inequalities.append_row(a);
    h.inequalities.append_row(b);
  }
  return h;
}

}  // namespace

TEST_CASE("cube H to V") {
  for (auto algo : {Algorithm::dd, Algorithm::bb}) {
    auto v = vertices_of(cube_h(3), HullOptions{algo});
    CHECK(v.points.rows() == 8);
    CHECK(v.rays.rows() == 0);
    auto h = facets_of(v, HullOptions{algo});
    CHECK(h == canonical_hrep(cube_h(3)));
  }
}

TEST_CASE("square triangulation") {
  Matrix<Q> pts{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}};
  auto r = beneath_beyond(pts);
  CHECK(r.facets.inequalities.rows() == 4);
  CHECK(r.triangulation.size() == 2);
  CHECK(r.triangulation.dim == 2);
}

TEST_CASE("degenerate inputs") {
  VRep<Q> point(Matrix<Q>{{1, 2, 3, 4}}, {}, {}, 3);
  for (auto algo : {Algorithm::dd, Algorithm::bb}) {
    auto h = facets_of(point, HullOptions{algo});
    CHECK(h.equations.rows() == 3);
    CHECK(h.inequalities.rows() == 0);
  }
  // segment in the plane
  VRep<Q> seg(Matrix<Q>{{1, 0, 0}, {1, 2, 2}, {1, 1, 1}}, {}, {}, 2);
  for (auto algo : {Algorithm::dd, Algorithm::bb}) {
    auto h = facets_of(seg, HullOptions{algo});
    CHECK(h.equations.rows() == 1);
    CHECK(h.inequalities.rows() == 2);
  }
  CHECK(volume_of(seg) == 2);
  // empty H
  HRep<Q> empty(Matrix<Q>{{-1, 1}, {0, -1}}, {}, 1);
  CHECK(vertices_of(empty).is_empty());
}

TEST_CASE("unbounded polyhedra") {
  HRep<Q> quad(Matrix<Q>{{0, 1, 0}, {0, 0, 1}, {-1, 1, 1}}, {}, 2);
  auto v = vertices_of(quad);
  CHECK(v.points.rows() == 2);
  CHECK(v.rays.rows() == 2);
  CHECK(facets_of(v) == canonical_hrep(quad));
  CHECK_THROWS_AS(vertices_of(quad, HullOptions{Algorithm::bb}), UnboundedError);
  HRep<Q> halfplane(Matrix<Q>{{0, 1, 0}}, {}, 2);
  auto hv = vertices_of(halfplane);
  CHECK(hv.lineality.rows() == 1);
  CHECK(hv.rays.rows() == 1);
}

TEST_CASE("simplex volume") {
  VRep<Q> tri(Matrix<Q>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}, {}, {}, 2);
  CHECK(volume_of(tri) == Q(1, 2));
  // volume of conv(0, e1, e2, e3) scaled by 2 is 8/6
  VRep<Q> s3(Matrix<Q>{{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 0, 2, 0}, {1, 0, 0, 2}}, {}, {}, 3);
  CHECK(volume_of(s3) == Q(4, 3));
}

TEST_CASE("Klee-Minty cube over Puiseux fractions") {
  auto h = klee_minty(3, P::parse("t"));
  auto v = vertices_of(h);
  CHECK(v.points.rows() == 8);
  auto f = facets_of(v);
  CHECK(f.inequalities.rows() == 6);
  P vol = volume_of(v);
  CHECK(vol == P::parse("1-2*t+t^2"));
  CHECK(vol.evaluate(Q(0)) == 1);
  CHECK(vol.evaluate(Q(1, 4)) == Q(9, 16));
  // the rational instance at t = 1/4 agrees
  auto vq = vertices_of(klee_minty(3, Q(1, 4)));
  CHECK(volume_of(vq) == Q(9, 16));
  auto vb = vertices_of(h, HullOptions{Algorithm::bb});
  CHECK(vb == v);
}

TEST_CASE("insertion order does not change the facets") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto v = random_box(4, 20, seed);
    auto ref = facets_of(v);
    for (const char* o : {"given", "random:3", "random:99", "vertices-first", "lex"}) {
      HullOptions opt{Algorithm::bb, InsertionOrder::parse(o)};
      CHECK(facets_of(v, opt) == ref);
    }
    Q vol = volume_of(v);
    CHECK(volume_of(v, InsertionOrder::random(seed)) == vol);
    CHECK(volume_of(v, InsertionOrder::lex()) == vol);
  }
}

TEST_CASE("double description row orders agree") {
  auto h = fibonacci_knapsack(5, 40);
  auto ref = vertices_of(h);
  for (auto ord : {DdRowOrder::given, DdRowOrder::maxcutoff, DdRowOrder::lexmin})
    for (bool alg : {false, true}) {
      HullOptions opt;
      opt.dd.row_order = ord;
      opt.dd.algebraic_adjacency = alg;
      CHECK(vertices_of(h, opt) == ref);
    }
}

TEST_CASE("triangulation volume equals the sum of simplex determinants") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto v = random_box(3, 10, seed);
    auto r = beneath_beyond(v.points);
    if (r.triangulation.dim != 3) continue;
    Q sum = 0;
    for (std::size_t s = 0; s < r.triangulation.size(); ++s) {
      auto idx = r.triangulation.simplex(s);
      std::vector<oracle::Row> m;
      for (std::size_t k = 1; k < idx.size(); ++k) {
        oracle::Row row;
        for (std::size_t j = 1; j <= 3; ++j) row.push_back(v.points(idx[k], j) - v.points(idx[0], j));
        m.push_back(row);
      }
      Q det = oracle::det(m);
      sum += det.sign() < 0 ? -det : det;
    }
    CHECK(sum / 6 == volume_of(v));
  }
}

TEST_CASE("cut polytope facet formulas") {
  for (std::size_t k = 0; k <= 2; ++k) {
    auto v = cut_polytope(Graph::asymmetric(k));
    CHECK(v.points.rows() == (std::size_t(1) << (k + 5)));
    CHECK(facets_of(v).inequalities.rows() == 2 * k + 20);
    CHECK(facets_of(v, HullOptions{Algorithm::bb}).inequalities.rows() == 2 * k + 20);
  }
  for (std::size_t k = 3; k <= 7; ++k) CHECK(facets_of(cut_polytope(Graph::path(k))).inequalities.rows() == 2 * k - 2);
  // bounds on triangle edges are not facets, so the cycle formula starts at 4
  for (std::size_t k = 4; k <= 7; ++k)
    CHECK(facets_of(cut_polytope(Graph::cycle(k))).inequalities.rows() == 2 * k + (std::size_t(1) << (k - 1)));
}
