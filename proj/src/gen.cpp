#include "polyhull/gen.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "polyhull/random.hpp"

namespace polyhull {

Graph::Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> e) : nodes(n) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [u, v] : e) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) throw InvalidArgument("duplicate edge");
    edges.emplace_back(u, v);
  }
}

Graph Graph::path(std::size_t k) {
  if (k < 1) throw InvalidArgument("path needs k >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph(k, std::move(e));
}

Graph Graph::cycle(std::size_t k) {
  if (k < 3) throw InvalidArgument("cycle needs k >= 3");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, k - 1);
  return Graph(k, std::move(e));
}

Graph Graph::complete(std::size_t k) {
  if (k < 1) throw InvalidArgument("complete graph needs k >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Graph(k, std::move(e));
}

Graph Graph::asymmetric(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}};
  std::size_t prev = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    e.emplace_back(prev, 5 + i);
    prev = 5 + i;
  }
  return Graph(k + 6, std::move(e));
}

namespace {

std::size_t parse_size(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InvalidArgument("bad " + std::string(what) + " '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph Graph::parse_family(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidArgument("graph spec must look like P:9, C:9, K:6 or Gk:4");
  std::string_view name = spec.substr(0, colon);
  std::size_t k = parse_size(spec.substr(colon + 1), "graph parameter");
  if (name == "P") return path(k);
  if (name == "C") return cycle(k);
  if (name == "K") return complete(k);
  if (name == "Gk" || name == "G") return asymmetric(k);
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw InvalidArgument("edge list must start with 'nodes edges'");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u, v;
    if (!(in >> u >> v)) throw InvalidArgument("edge list is truncated");
    e.emplace_back(u, v);
  }
  return Graph(n, std::move(e));
}

HRep<Rational> fractional_knapsack(const std::vector<Rational>& coeffs) {
  if (coeffs.size() < 2) throw InvalidArgument("knapsack needs at least one variable");
  const std::size_t d = coeffs.size() - 1;
  HRep<Rational> h(d);
  for (std::size_t i = 1; i <= d; ++i) {
    Vector<Rational> r(d + 1, Rational(0));
    r[i] = 1;
    h.inequalities.append_row(r);
  }
  h.inequalities.append_row(coeffs);
  return h;
}

std::vector<Integer> fibonacci_weights(std::size_t d) {
  std::vector<Integer> a;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == 0)
      a.push_back(2);
    else if (i == 1)
      a.push_back(3);
    else
      a.push_back(a[i - 2] + a[i - 1]);
  }
  return a;
}

HRep<Rational> fibonacci_knapsack(std::size_t d, const Rational& b) {
  if (d == 0) throw InvalidArgument("knapsack needs d >= 1");
  std::vector<Rational> coeffs{b};
  for (const auto& a : fibonacci_weights(d)) coeffs.push_back(Rational(Integer(-a)));
  return fractional_knapsack(coeffs);
}

VRep<Rational> cut_polytope(const Graph& g, std::size_t node_limit) {
  if (g.nodes == 0) throw InvalidArgument("cut polytope of the empty graph");
  if (g.nodes > node_limit) throw InvalidArgument("graph has more nodes than the cut enumeration limit");
  const std::size_t d = g.edge_count();
  VRep<Rational> v(d);
  const std::uint64_t count = std::uint64_t(1) << (g.nodes - 1);
  Vector<Rational> row(d + 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto side = [&](std::size_t node) { return node == 0 ? false : ((mask >> (node - 1)) & 1) != 0; };
    row[0] = 1;
    for (std::size_t e = 0; e < d; ++e) row[e + 1] = side(g.edges[e].first) != side(g.edges[e].second) ? 1 : 0;
    v.points.append_row(row);
  }
  return v;
}

HRep<Rational> matching_polytope(const Graph& g) {
  const std::size_t d = g.edge_count();
  HRep<Rational> h(d);
  for (std::size_t e = 0; e < d; ++e) {
    Vector<Rational> r(d + 1, Rational(0));
    r[e + 1] = 1;
    h.inequalities.append_row(r);
  }
  for (std::size_t v = 0; v < g.nodes; ++v) {
    Vector<Rational> r(d + 1, Rational(0));
    r[0] = 1;
    for (std::size_t e = 0; e < d; ++e)
      if (g.edges[e].first == v || g.edges[e].second == v) r[e + 1] = -1;
    h.inequalities.append_row(r);
  }
  return h;
}

VRep<Rational> hard_simplex(const Integer& a, const Integer& b, const Integer& c) {
  if (a <= 0 || b <= 0 || c <= 0) throw InvalidArgument("hard simplex parameters must be positive");
  if (gcd(a, b) != 1 || gcd(a, c) != 1 || gcd(b, c) != 1) throw InvalidArgument("hard simplex parameters must be pairwise coprime");
  auto pt = [](std::initializer_list<Rational> x) {
    Vector<Rational> r{1};
    r.insert(r.end(), x.begin(), x.end());
    return r;
  };
  VRep<Rational> v(5);
  v.points.append_row(pt({0, 0, 0, 0, 0}));
  v.points.append_row(pt({1, 0, 0, 0, 0}));
  v.points.append_row(pt({0, 1, 0, 0, 0}));
  v.points.append_row(pt({1, 1, a, 0, 0}));
  v.points.append_row(pt({1, 1, 0, b, 0}));
  v.points.append_row(pt({1, 1, 0, 0, c}));
  return v;
}

SiteSet random_sites(std::size_t d, std::size_t m, std::uint64_t seed) {
  if (d < 1) throw InvalidArgument("sites need d >= 1");
  if (m < 1) throw InvalidArgument("need at least one site");
  SiteSet s{Matrix<Rational>(m, d - 1), seed};
  Xorshift64Star rng(seed);
  const std::int64_t scale = std::int64_t(1) << 31;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j + 1 < d; ++j) s.sites(i, j) = Rational(Integer(static_cast<long>(rng.uniform(-scale, scale))), Integer(static_cast<long>(scale)));
  return s;
}

HRep<Rational> voronoi_lift(const SiteSet& s) {
  const std::size_t m = s.sites.rows();
  if (m == 0) throw InvalidArgument("need at least one site");
  const std::size_t d = s.sites.cols() + 1;
  HRep<Rational> h(d);
  for (std::size_t i = 0; i < m; ++i) {
    Vector<Rational> r(d + 1, Rational(0));
    Rational norm = 0;
    for (std::size_t j = 0; j + 1 < d; ++j) {
      norm += s.sites(i, j) * s.sites(i, j);
      r[j + 1] = s.sites(i, j) * Rational(-2);
    }
    r[0] = norm;
    r[d] = 1;
    h.inequalities.append_row(r);
  }
  return h;
}

VRep<Rational> random_box(std::size_t d, std::size_t n, std::uint64_t seed) {
  VRep<Rational> v(d);
  Xorshift64Star rng(seed);
  Vector<Rational> row(d + 1);
  for (std::size_t i = 0; i < n; ++i) {
    row[0] = 1;
    for (std::size_t j = 0; j < d; ++j) row[j + 1] = Rational(static_cast<long>(rng.below(6)));
    v.points.append_row(row);
  }
  return v;
}

}  // namespace polyhull
