#include "doctest.h"
#include "polyhull/gen.hpp"
#include "polyhull/lattice.hpp"
#include "polyhull/polytope.hpp"
#include "polyhull/redundancy.hpp"

using namespace polyhull;
using Q = Rational;

TEST_CASE("dimension") {
  CHECK(Polytope<Q>::from_v(cut_polytope(Graph::asymmetric(0))).dimension() == 6);
  CHECK(Polytope<Q>::from_h(matching_polytope(Graph::complete(4))).dimension() == 6);
  CHECK(Polytope<Q>::from_v(VRep<Q>(Matrix<Q>{{1, 3, 4}}, {}, {}, 2)).dimension() == 0);
  CHECK(Polytope<Q>::from_h(HRep<Q>(Matrix<Q>{{-1, 1}, {0, -1}}, {}, 1)).dimension() == -1);
  CHECK(Polytope<Q>::from_h(HRep<Q>(Matrix<Q>{{-1, 1}, {0, -1}}, {}, 1)).is_empty());
}

TEST_CASE("contains") {
  auto f = fibonacci_knapsack(5, 40);
  CHECK(contains(f, Vector<Q>{0, 0, 0, 0, 0}));
  CHECK_FALSE(contains(f, Vector<Q>{21, 0, 0, 0, 0}));
  CHECK(contains(f, Vector<Q>{20, 0, 0, 0, 0}));
  CHECK_THROWS_AS(contains(f, Vector<Q>{0, 0}), DimensionMismatch);
}

TEST_CASE("contains holds for every vertex of generated families") {
  std::vector<HRep<Q>> hs{fibonacci_knapsack(4, 30), matching_polytope(Graph::complete(5)), voronoi_lift(random_sites(3, 15, 4))};
  for (const auto& h : hs) {
    auto v = vertices_of(h);
    for (std::size_t i = 0; i < v.points.rows(); ++i)
      CHECK(contains(h, Vector<Q>(v.points.row(i).begin() + 1, v.points.row(i).end())));
  }
  for (const auto& v : {cut_polytope(Graph::cycle(5)), random_box(3, 15, 2)}) {
    auto h = facets_of(v);
    for (std::size_t i = 0; i < v.points.rows(); ++i)
      CHECK(contains(h, Vector<Q>(v.points.row(i).begin() + 1, v.points.row(i).end())));
  }
}

TEST_CASE("irredundant points") {
  Matrix<Q> line{{1, 0}, {1, 1}, {1, Q(1, 2)}};
  CHECK(irredundant_points(line) == std::vector<std::size_t>{0, 1});
  Matrix<Q> simplex{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}};
  CHECK(irredundant_points(simplex) == std::vector<std::size_t>{0, 1, 2});
  auto pts = enumerate(Polytope<Q>::from_h(fibonacci_knapsack(5, 40)), LatticeMethod::projection);
  CHECK(irredundant_points(pts.points).size() == 16);
}

TEST_CASE("irredundant points then hull gives the same facets") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto v = random_box(4, 20, seed);
    auto keep = irredundant_points(v.points);
    VRep<Q> reduced(v.points.select_rows(keep), {}, {}, 4);
    CHECK(facets_of(reduced) == facets_of(v));
    CHECK(vertices_of(facets_of(v)) == canonical_vrep(reduced));
  }
}

TEST_CASE("irredundant inequalities") {
  HRep<Q> cube(Matrix<Q>{{0, 1, 0}, {1, -1, 0}, {0, 0, 1}, {1, 0, -1}, {0, 1, 0}, {2, -2, 0}}, {}, 2);
  CHECK(irredundant_inequalities(cube).inequalities.rows() == 4);
  HRep<Q> two(Matrix<Q>{{0, 1}, {-1, 1}}, {}, 1);
  CHECK(irredundant_inequalities(two).inequalities == Matrix<Q>{{-1, 1}});
  HRep<Q> empty(Matrix<Q>{{-1, 1}, {0, -1}}, {}, 1);
  CHECK(is_infeasible_marker(irredundant_inequalities(empty)));
}

TEST_CASE("Fourier-Motzkin projection matches the hull of projected vertices") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto v = random_box(4, 20, seed);
    auto h = facets_of(v);
    if (h.equations.rows()) continue;
    auto fm = irredundant_inequalities(HRep<Q>(fourier_motzkin_last(h.inequalities), {}, 3));
    Matrix<Q> proj = Matrix<Q>::with_cols(4);
    for (std::size_t i = 0; i < v.points.rows(); ++i) {
      auto r = v.points.row(i);
      proj.append_row(Vector<Q>(r.begin(), r.begin() + 4));
    }
    CHECK(fm == facets_of(VRep<Q>(proj, {}, {}, 3)));
  }
}

TEST_CASE("homogenize round trip") {
  VRep<Q> seg(Matrix<Q>{{1, 0}, {1, 1}}, {}, {}, 1);
  auto c = homogenize(seg);
  CHECK(c.rays == Matrix<Q>{{1, 0}, {1, 1}});
  auto cone = Cone<Q>::from_generators(Matrix<Q>{{1, 0}, {0, 1}}, {}, 2);
  auto back = dehomogenize(cone).v();
  CHECK(back.rays.rows() == 1);
  CHECK(back.points.rows() == 1);
  auto f = Polytope<Q>::from_h(fibonacci_knapsack(5, 40));
  auto v = canonical_vrep(f.v());
  CHECK(canonical_vrep(dehomogenize(homogenize(Polytope<Q>::from_v(v))).v()) == v);
  auto h = canonical_hrep(f.h());
  CHECK(canonical_hrep(dehomogenize(homogenize(f)).h()) == h);
}
