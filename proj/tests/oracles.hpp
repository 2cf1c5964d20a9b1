#pragma once

// Brute-force reference implementations.  They share no code with the
// library beyond scalar arithmetic and simple containers.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "polyhull/rational.hpp"

namespace oracle {

using polyhull::Integer;
using polyhull::Rational;
using Row = std::vector<Rational>;

/** a0 + a.x >= 0 for every row, x given without the leading 1. */
inline bool satisfies(const std::vector<Row>& ineq, const std::vector<Rational>& x) {
  for (const auto& r : ineq) {
    Rational s = r[0];
    for (std::size_t j = 0; j < x.size(); ++j) s += r[j + 1] * x[j];
    if (s.sign() < 0) return false;
  }
  return true;
}

/** Every integer point of the box [lo, hi] satisfying all rows. */
inline std::vector<std::vector<long>> box_filter(const std::vector<Row>& ineq, const std::vector<long>& lo,
                                                 const std::vector<long>& hi) {
  const std::size_t d = lo.size();
  std::vector<std::vector<long>> out;
  std::vector<long> x(lo);
  std::vector<Rational> xq(d);
  for (;;) {
    for (std::size_t j = 0; j < d; ++j) xq[j] = Rational(Integer(x[j]));
    if (satisfies(ineq, xq)) out.push_back(x);
    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) x[j] = lo[j], ++j;
    if (j == d) break;
    ++x[j];
  }
  return out;
}

/** Number of matchings (including the empty one) of K_n, by subset enumeration. */
inline std::size_t matchings_of_complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << edges.size()); ++mask) {
    std::vector<int> deg(n, 0);
    bool ok = true;
    for (std::size_t e = 0; e < edges.size() && ok; ++e)
      if (mask >> e & 1) ok = ++deg[edges[e].first] <= 1 && ++deg[edges[e].second] <= 1;
    count += ok;
  }
  return count;
}

/** Fibonacci-weight knapsack count: x >= 0 integer with sum a_i x_i <= b, a = 2,3,5,8,... */
inline std::size_t knapsack_count(std::size_t d, long b) {
  std::vector<long> a{2, 3};
  while (a.size() < d) a.push_back(a[a.size() - 1] + a[a.size() - 2]);
  a.resize(d);
  // nested loops written as a recursion over the remaining budget
  auto rec = [&](auto&& self, std::size_t i, long left) -> std::size_t {
    if (i == d) return 1;
    std::size_t s = 0;
    for (long x = 0; a[i] * x <= left; ++x) s += self(self, i + 1, left - a[i] * x);
    return s;
  };
  return rec(rec, 0, b);
}

/** max of c0 + c.x over a finite list of points (without the leading 1). */
inline Rational max_over(const Row& c, const std::vector<std::vector<Rational>>& pts) {
  Rational best;
  bool first = true;
  for (const auto& p : pts) {
    Rational v = c[0];
    for (std::size_t j = 0; j < p.size(); ++j) v += c[j + 1] * p[j];
    if (first || v > best) best = v, first = false;
  }
  return best;
}

/** Determinant by cofactor expansion. */
inline Rational det(const std::vector<Row>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<Row> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Row r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(r);
    }
    Rational t = m[0][j] * det(minor);
    s += j % 2 ? -t : t;
  }
  return s;
}

}  // namespace oracle
