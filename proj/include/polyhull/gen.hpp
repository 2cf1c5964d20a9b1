#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyhull/representation.hpp"

namespace polyhull {

/** Simple undirected graph; edge i is edges[i] with first < second. */
struct Graph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  Graph() = default;
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> e);

  std::size_t edge_count() const { return edges.size(); }

  static Graph path(std::size_t k);
  static Graph cycle(std::size_t k);
  static Graph complete(std::size_t k);
  /**
   * Unicyclic graph on k+6 nodes: the 4-cycle 0-1-2-3, a pendant edge at
   * node 0 and a pendant path with k+1 edges at node 1.
   */
  static Graph asymmetric(std::size_t k);
  /** "P:9", "C:9", "K:6", "Gk:4". */
  static Graph parse_family(std::string_view spec);
  /** First line "n m", then m lines "u v" (0-based). */
  static Graph parse_edge_list(std::string_view text);
};

/** Coefficients (b, -a1, ..., -ad): nonnegativity rows followed by b - <a, x> >= 0. */
HRep<Rational> fractional_knapsack(const std::vector<Rational>& coeffs);

/** a1 = 2, a2 = 3, a_i = a_{i-2} + a_{i-1}. */
std::vector<Integer> fibonacci_weights(std::size_t d);
HRep<Rational> fibonacci_knapsack(std::size_t d, const Rational& b);

/** Incidence vectors of all 2^(n-1) cuts; node 0 stays on one side. */
VRep<Rational> cut_polytope(const Graph& g, std::size_t node_limit = 25);

/** x_e >= 0 for every edge, then 1 - sum_{e at v} x_e >= 0 for every node. */
HRep<Rational> matching_polytope(const Graph& g);

/** conv(0, e1, e2, e1+e2+a e3, e1+e2+b e4, e1+e2+c e5) for pairwise coprime a, b, c. */
VRep<Rational> hard_simplex(const Integer& a, const Integer& b, const Integer& c);

struct SiteSet {
  Matrix<Rational> sites;  // m rows of length d-1
  std::uint64_t seed = 0;
};

/** m sites in [-1,1]^(d-1) with coordinates k / 2^31, k uniform in [-2^31, 2^31]. */
SiteSet random_sites(std::size_t d, std::size_t m, std::uint64_t seed);

/** Variables (x, delta): delta - 2<s, x> + |s|^2 >= 0 for every site s. */
HRep<Rational> voronoi_lift(const SiteSet& s);

/** n points of {0,...,5}^d drawn uniformly. */
VRep<Rational> random_box(std::size_t d, std::size_t n, std::uint64_t seed);

/**
 * Klee-Minty cube: 0 <= x1 <= 1 and t x_{i-1} <= x_i <= 1 - t x_{i-1}.
 */
template <class S>
HRep<S> klee_minty(std::size_t d, const S& t) {
  if (d == 0) throw InvalidArgument("Klee-Minty cube needs d >= 1");
  HRep<S> h(d);
  auto row = [&](std::initializer_list<std::pair<std::size_t, S>> entries) {
    Vector<S> r(d + 1, S(0));
    for (const auto& [j, v] : entries) r[j] = v;
    h.inequalities.append_row(r);
  };
  row({{1, S(1)}});
  row({{0, S(1)}, {1, S(-1)}});
  for (std::size_t i = 2; i <= d; ++i) {
    row({{i - 1, -t}, {i, S(1)}});
    row({{0, S(1)}, {i - 1, -t}, {i, S(-1)}});
  }
  return h;
}

}  // namespace polyhull
