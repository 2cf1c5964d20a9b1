#include "doctest.h"
#include "polyhull/representation.hpp"

using namespace polyhull;
using Q = Rational;

TEST_CASE("canonicalize_row") {
  CHECK(canonicalize_row(Vector<Q>{2, -4, 6}) == Vector<Q>{1, -2, 3});
  CHECK(canonicalize_row(Vector<Q>{Q(1, 2), Q(1, 3), 0}) == Vector<Q>{3, 2, 0});
  CHECK_THROWS_AS(canonicalize_row(Vector<Q>{0, 0, 0}), InvalidArgument);
  CHECK(canonicalize_row(Vector<Q>{2, -4, 6}, RowKind::equation) == Vector<Q>{-1, 2, -3});
  CHECK(canonicalize_row(Vector<Q>{-2, 4, 6}) == Vector<Q>{-1, 2, 3});
}

TEST_CASE("canonical hrep") {
  // x >= 0, 2x >= 0, 1 - x >= 0, x - 2 >= -1 (i.e. x >= 1)
  HRep<Q> h(Matrix<Q>{{0, 1}, {0, 2}, {1, -1}, {-1, 1}}, {}, 1);
  HRep<Q> c = canonical_hrep(h);
  CHECK(c.inequalities == Matrix<Q>{{-1, 1}, {0, 1}, {1, -1}});
  // x + y = 1 with x >= 0 rewritten modulo the equation
  HRep<Q> g(Matrix<Q>{{0, 1, 0}, {0, 0, 1}}, Matrix<Q>{{-2, 2, 2}}, 2);
  HRep<Q> cg = canonical_hrep(g);
  CHECK(cg.equations == Matrix<Q>{{-1, 1, 1}});
  CHECK(cg.inequalities == Matrix<Q>{{0, 0, 1}, {1, 0, -1}});
  HRep<Q> bad(Matrix<Q>{{-1, 0}}, {}, 1);
  CHECK(is_infeasible_marker(canonical_hrep(bad)));
}

TEST_CASE("contains and affine hull") {
  HRep<Q> h(Matrix<Q>{{0, 1}, {1, -1}}, {}, 1);
  CHECK(contains(h, Vector<Q>{Q(1, 2)}));
  CHECK_FALSE(contains(h, Vector<Q>{2}));
  CHECK_THROWS_AS(contains(h, Vector<Q>{1, 2}), DimensionMismatch);
  VRep<Q> v = VRep<Q>::from_affine_points({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  Matrix<Q> eq = affine_hull_equations(v);
  CHECK(eq == Matrix<Q>{{-1, 1, 1, 1}});
  AffineChart<Q> chart(3, eq);
  CHECK(chart.kept == std::vector<std::size_t>{2, 3});
  Vector<Q> p = chart.lift_point(Vector<Q>{1, Q(1, 4), Q(1, 4)});
  CHECK(p == Vector<Q>{1, Q(1, 2), Q(1, 4), Q(1, 4)});
}

TEST_CASE("homogenize round trip") {
  VRep<Q> v = VRep<Q>::from_affine_points({{0}, {1}}, 1);
  Cone<Q> c = homogenize(v);
  CHECK(c.rays == Matrix<Q>{{1, 0}, {1, 1}});
  CHECK(canonical_vrep(dehomogenize_generators(c)) == canonical_vrep(v));
  Cone<Q> r = Cone<Q>::from_generators(Matrix<Q>{{0, 1}, {2, 2}}, {}, 2);
  VRep<Q> back = dehomogenize_generators(r);
  CHECK(back.rays == Matrix<Q>{{0, 1}});
  CHECK(back.points == Matrix<Q>{{1, 1}});
  HRep<Q> h(Matrix<Q>{{0, 1}, {1, -1}}, {}, 1);
  CHECK(dehomogenize_inequalities(homogenize(h)) == h);
}
