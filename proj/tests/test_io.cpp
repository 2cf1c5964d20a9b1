#include <sstream>

#include "doctest.h"
#include "polyhull/gen.hpp"
#include "polyhull/poly_io.hpp"

using namespace polyhull;
using Q = Rational;
using P = PuiseuxFraction;

namespace {

template <class T>
std::string dump(const T& x) {
  std::ostringstream os;
  write_poly(os, x);
  return os.str();
}

}  // namespace

TEST_CASE("write format") {
  HRep<Q> h(Matrix<Q>{{0, 1}, {Q(3, 2), -1}}, {}, 1);
  CHECK(dump(h) == "H 1\nINEQ\n2 2\n0 1\n3/2 -1\nEQ\n0 2\n");
}

TEST_CASE("round trips are byte exact") {
  std::vector<std::string> texts{dump(fibonacci_knapsack(5, 40)), dump(cut_polytope(Graph::asymmetric(1))),
                                 dump(voronoi_lift(random_sites(3, 5, 2))), dump(random_box(4, 20, 1))};
  for (const auto& t : texts) {
    auto any = read_poly(t);
    REQUIRE(std::holds_alternative<PolyData<Q>>(any));
    CHECK(dump(std::get<PolyData<Q>>(any)) == t);
  }
  std::string km = dump(klee_minty(3, P::parse("t")));
  auto any = read_poly(km);
  REQUIRE(std::holds_alternative<PolyData<P>>(any));
  CHECK(dump(std::get<PolyData<P>>(any)) == km);
}

TEST_CASE("comments, blank lines and section order") {
  auto any = read_poly("# a square\nV 2\n\nPTS 4 3\n1 0 0\n1 1 0 # corner\n1 0 1\n1 1 1\nLIN\n0 3\n");
  auto& p = std::get<PolyData<Q>>(any);
  CHECK_FALSE(p.is_h);
  CHECK(p.v.points.rows() == 4);
  CHECK(p.v.rays.rows() == 0);
}

TEST_CASE("errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      read_poly(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("X 2\n") == 1);
  CHECK(line_of("H 1\nINEQ\n1 3\n0 1 2\n") == 3);
  CHECK(line_of("H 1\nINEQ\n2 2\n0 1\n1 x\n") == 5);
  CHECK(line_of("H 1\nINEQ\n1 2\n0 1/0\n") == 4);
  CHECK(line_of("H 1\nINEQ\n2 2\n0 1\n") == 4);
  CHECK(line_of("V 1\nPTS\n1 2\n2 0\n") == 4);
  CHECK(line_of("V 1\nRAYS\n1 2\n1 0\n") == 4);
  CHECK(line_of("H 1\nPTS\n0 2\n") == 2);
  CHECK(line_of("H 1\nINEQ\n0 2\nINEQ\n0 2\n") == 4);
}
