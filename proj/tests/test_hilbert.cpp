#include <set>

#include "doctest.h"
#include "polyhull/gen.hpp"
#include "polyhull/hilbert.hpp"

using namespace polyhull;
using Q = Rational;

namespace {

// x is in the cone iff every facet value is nonnegative
bool in_cone(const Matrix<Q>& facets, const std::vector<Q>& x) {
  for (std::size_t f = 0; f < facets.rows(); ++f) {
    Q s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += facets(f, j) * x[j];
    if (s.sign() < 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("simplicial cones") {
  CHECK(hilbert_basis_simplicial(Matrix<Q>{{1, 0}, {1, 2}}).elements.rows() == 3);
  CHECK(hilbert_basis_simplicial(Matrix<Q>{{1, 0}, {1, 5}}).elements.rows() == 6);
  CHECK(hilbert_basis_simplicial(Matrix<Q>{{1, 0}, {0, 1}}).elements.rows() == 2);
  CHECK_THROWS_AS(hilbert_basis_simplicial(Matrix<Q>{{1, 0}, {2, 0}}), InvalidArgument);
}

TEST_CASE("parallelepiped points") {
  auto p = parallelepiped_points(Matrix<Q>{{1, 0}, {1, 3}}, std::nullopt);
  CHECK(p == Matrix<Q>{{1, 1}, {1, 2}});
  CHECK(parallelepiped_points(Matrix<Q>{{1, 0, 0}, {0, 1, 0}}, std::nullopt).rows() == 0);
  // the number of points, with zero, is the index |det|
  auto q = parallelepiped_points(Matrix<Q>{{2, 1, 0}, {0, 3, 1}, {1, 0, 4}}, std::nullopt);
  CHECK(q.rows() + 1 == 25);
}

TEST_CASE("non-simplicial cone over the unit square") {
  auto c = homogenize(VRep<Q>(Matrix<Q>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}, {}, {}, 2));
  auto hb = hilbert_basis(c);
  CHECK(hb.elements.rows() == 4);
  CHECK(hb.generators.rows() == 4);
}

TEST_CASE("not pointed") {
  auto c = Cone<Q>::from_generators(Matrix<Q>{{1, 0}}, Matrix<Q>{{0, 1}}, 2);
  CHECK_THROWS_AS(hilbert_basis(c), NotPointedError);
  auto half = Cone<Q>::from_inequalities(Matrix<Q>{{1, 0}}, {}, 2);
  CHECK_THROWS_AS(hilbert_basis(half), NotPointedError);
}

TEST_CASE("height-one slice counts lattice points") {
  auto p = Polytope<Q>::from_h(fibonacci_knapsack(4, 40));
  CHECK(enumerate_via_hilbert(p).count == 1021);
}

TEST_CASE("minimality and generation") {
  // a 3-dimensional cone with four rays
  auto c = Cone<Q>::from_generators(Matrix<Q>{{1, 0, 0}, {1, 3, 0}, {1, 0, 2}, {1, 2, 3}}, {}, 3);
  auto hb = hilbert_basis(c);
  const auto& e = hb.elements;
  auto facets = double_description(c.rays, Matrix<Q>::with_cols(3)).rays;
  std::set<std::vector<Q>> basis;
  for (std::size_t i = 0; i < e.rows(); ++i) basis.emplace(e.row(i).begin(), e.row(i).end());
  // no element is the sum of two others
  for (const auto& a : basis)
    for (const auto& b : basis) {
      std::vector<Q> s(3);
      for (int j = 0; j < 3; ++j) s[j] = a[j] + b[j];
      CHECK(basis.count(s) == 0);
    }
  // every lattice point of the cone up to height 6 is a sum of elements
  std::set<std::vector<Q>> reach{{0, 0, 0}};
  std::vector<std::vector<Q>> frontier{{0, 0, 0}};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& b : basis) {
      std::vector<Q> y(3);
      for (int j = 0; j < 3; ++j) y[j] = x[j] + b[j];
      if (y[0] <= 6 && reach.insert(y).second) frontier.push_back(y);
    }
  }
  for (long h = 1; h <= 6; ++h)
    for (long a = 0; a <= 3 * h; ++a)
      for (long b = 0; b <= 3 * h; ++b) {
        std::vector<Q> x{Q(Integer(h)), Q(Integer(a)), Q(Integer(b))};
        if (in_cone(facets, x)) CHECK(reach.count(x) == 1);
      }
}
