// One line per acceptance criterion: "criterion N: PASS|FAIL  <detail>".
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "polyhull/bench.hpp"
#include "polyhull/gen.hpp"
#include "polyhull/lattice.hpp"
#include "polyhull/redundancy.hpp"

using namespace polyhull;
using Q = Rational;
using P = PuiseuxFraction;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream note, detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      ok = false;
      detail << " [" << what << ": got " << got << ", want " << want << "]";
    }
  }
};


int failures = 0;

void run(int id, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!c.ok) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", sec);
  std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << " " << c.note.str() << c.detail.str() << " (" << buf << ")"
            << std::endl;
}

Polytope<Q> F(std::size_t d, long b) { return Polytope<Q>::from_h(fibonacci_knapsack(d, Q(Integer(b)))); }

VRep<Q> as_vrep(const Matrix<Q>& pts, std::size_t d) { return canonical_vrep(VRep<Q>(pts, {}, {}, d)); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  run(1, [](Check& c) {
    for (std::size_t k = 0; k <= 4; ++k) {
      auto v = cut_polytope(Graph::asymmetric(k));
      const std::string tag = "G" + std::to_string(k);
      c.equal(v.points.rows(), std::size_t(1) << (k + 5), tag + " vertices");
      c.equal(facets_of(v).inequalities.rows(), 2 * k + 20, tag + " dd facets");
      c.equal(facets_of(v, HullOptions{Algorithm::bb}).inequalities.rows(), 2 * k + 20, tag + " bb facets");
    }
    c.note << "Cut(G_k), k=0..4: 2k+20 facets and 2^(k+5) vertices by dd and bb";
  });

  run(2, [](Check& c) {
    struct Case {
      const char* fam;
      std::size_t n, m;
    };
    for (const Case& cs : {Case{"P:9", 256, 16}, Case{"C:9", 256, 274}, Case{"K:6", 32, 368}}) {
      auto v = cut_polytope(Graph::parse_family(cs.fam));
      c.equal(v.points.rows(), cs.n, std::string(cs.fam) + " vertices");
      c.equal(facets_of(v).inequalities.rows(), cs.m, std::string(cs.fam) + " dd facets");
      c.equal(facets_of(v, HullOptions{Algorithm::bb}).inequalities.rows(), cs.m, std::string(cs.fam) + " bb facets");
    }
    c.note << "Cut(P9) 16 facets/256 vertices, Cut(C9) 274, Cut(K6) 368";
  });

  run(3, [](Check& c) {
    auto p = F(5, 40);
    for (auto m : {LatticeMethod::bbox, LatticeMethod::projection, LatticeMethod::hilbert})
      c.equal(count(p, m), std::size_t(1366), std::string("count ") + to_string(m));
    auto ih = integer_hull(p);
    c.equal(ih.v().points.rows(), std::size_t(16), "integer hull vertices");
    c.equal(ih.h().inequalities.rows(), std::size_t(12), "integer hull facets");
    auto lp = solve_lp(LinearProgram<Q>{p.h(), {0, 1, 2, 1, 2, 1}, Sense::maximize});
    c.equal(*lp.optimal_value, Q(80, 3), "LP value");
    c.expect(*lp.optimal_vertex == Vector<Q>{0, Q(40, 3), 0, 0, 0}, "LP vertex (0,40/3,0,0,0)");
    auto ilp = solve_lp(LinearProgram<Q>{ih.h(), {0, 1, 2, 1, 2, 1}, Sense::maximize});
    c.equal(*ilp.optimal_value, Q(26), "ILP value");
    c.expect(*ilp.optimal_vertex == Vector<Q>{2, 12, 0, 0, 0}, "ILP vertex (2,12,0,0,0)");
    c.note << "F5(40): 1366 points by bbox/projection/hilbert, hull 16 vertices/12 facets, LP 80/3, ILP 26";
  });

  run(4, [](Check& c) {
    c.equal(count(F(4, 40), LatticeMethod::projection), std::size_t(1021), "F4(40)");
    c.equal(count(F(6, 60), LatticeMethod::projection), std::size_t(7853), "F6(60)");
    c.equal(count(F(4, 60), LatticeMethod::projection), std::size_t(4008), "F4(60)");
    const std::size_t f550 = oracle::knapsack_count(5, 50);
    c.equal(f550, std::size_t(3173), "F5(50) oracle");
    for (auto m : {LatticeMethod::bbox, LatticeMethod::projection})
      c.equal(count(F(5, 50), m), f550, std::string("F5(50) ") + to_string(m));
    std::size_t x8_nonzero = 0;
    for (std::size_t d = 8; d <= 10; ++d) {
      auto s = enumerate(F(d, 60), LatticeMethod::projection);
      c.equal(s.count, std::size_t(8171), "F" + std::to_string(d) + "(60)");
      for (std::size_t i = 0; i < s.points.rows(); ++i) {
        bool tail_zero = true;
        for (std::size_t j = 8; j <= d; ++j) tail_zero = tail_zero && s.points(i, j).is_zero();
        x8_nonzero += !tail_zero;
      }
    }
    // the requirement says coordinates 8..d vanish; a8 = 55 <= 60 makes x8 = 1 feasible
    c.equal(x8_nonzero, std::size_t(0), "points with a nonzero coordinate beyond the 7th (over d=8,9,10)");
    c.note << "knapsack spot counts, F5(50) pinned to oracle value " << f550 << ", F_d(60)=8171 for d=8..10";
  });

  run(5, [](Check& c) {
    auto h = klee_minty(3, P::parse("t"));
    auto v = vertices_of(h);
    auto f = facets_of(v);
    c.equal(f.inequalities.rows(), std::size_t(6), "facets");
    c.expect(f == canonical_hrep(h), "facets equal the six defining inequalities");
    P vol = volume_of(v);
    c.expect(vol == P::parse("1-2*t+t^2"), "volume 1-2*t+t^2, got " + vol.to_string());
    c.equal(vol.evaluate(Q(0)), Q(1), "volume at t=0");
    c.note << "Klee-Minty d=3: 6 facets, volume " << vol.to_string() << ", 1 at t=0";
  });

  run(6, [](Check& c) {
    auto p = Polytope<Q>::from_v(hard_simplex(101, 103, 107));
    for (auto m : {LatticeMethod::projection, LatticeMethod::bbox}) {
      auto s = enumerate(p, m);
      c.equal(s.count, std::size_t(6), std::string("count ") + to_string(m));
      c.expect(as_vrep(s.points, 5) == canonical_vrep(p.v()), std::string(to_string(m)) + " points equal the vertices");
    }
    c.note << "hard simplex (101,103,107): projection and bbox find exactly the 6 vertices";
  });

  run(7, [](Check& c) {
    for (std::size_t n = 4; n <= 6; ++n) {
      auto h = matching_polytope(Graph::complete(n));
      const std::size_t want = oracle::matchings_of_complete(n);
      c.equal(enumerate_zero_one(h).count, want, "M(K" + std::to_string(n) + ") zero-one");
      if (n <= 5) c.equal(count(Polytope<Q>::from_h(h), LatticeMethod::projection), want, "M(K" + std::to_string(n) + ") projection");
    }
    c.equal(oracle::matchings_of_complete(4), std::size_t(10), "oracle K4");
    c.equal(oracle::matchings_of_complete(5), std::size_t(26), "oracle K5");
    c.equal(oracle::matchings_of_complete(6), std::size_t(76), "oracle K6");
    c.note << "matching 0/1 points 10, 26, 76 (oracle-checked, projection for n=4,5)";
  });

  run(8, [](Check& c) {
    const std::size_t d = 4, m = 50;
    std::size_t vertices = 0, bad_simple = 0, bad_dist = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto s = random_sites(d, m, seed);
      auto h = voronoi_lift(s);
      auto v = vertices_of(h);
      vertices += v.points.rows();
      for (std::size_t i = 0; i < v.points.rows(); ++i) {
        auto pt = v.points.row(i);
        std::vector<Q> dist(m);
        std::vector<bool> active(m);
        std::size_t n_active = 0;
        for (std::size_t k = 0; k < m; ++k) {
          Q dd = 0;
          for (std::size_t j = 0; j + 1 < d; ++j) dd += (pt[j + 1] - s.sites(k, j)) * (pt[j + 1] - s.sites(k, j));
          dist[k] = dd;
          active[k] = dot(h.inequalities.row(k), pt).is_zero();
          n_active += active[k];
        }
        bad_simple += n_active != d;
        std::optional<Q> r;
        bool ok = true;
        for (std::size_t k = 0; k < m; ++k)
          if (active[k]) {
            ok = ok && (!r || dist[k] == *r);
            r = dist[k];
          }
        for (std::size_t k = 0; k < m && r; ++k)
          if (!active[k]) ok = ok && dist[k] > *r;
        bad_dist += !ok;
      }
    }
    c.equal(bad_simple, std::size_t(0), "vertices not on exactly d facets");
    c.equal(bad_dist, std::size_t(0), "vertices with unequal active distances");
    c.note << "Voronoi d=4, m=50, 10 seeds: " << vertices << " vertices, all simple and equidistant";
  });

  run(9, [](Check& c) {
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      auto v = random_box(4, 20, seed);
      auto dd = facets_of(v);
      auto bb = facets_of(v, HullOptions{Algorithm::bb});
      bool ok = dd == bb;
      auto keep = irredundant_points(v.points);
      ok = ok && vertices_of(dd) == canonical_vrep(VRep<Q>(v.points.select_rows(keep), {}, {}, 4));
      std::vector<oracle::Row> rows;
      for (std::size_t i = 0; i < dd.inequalities.rows(); ++i)
        rows.emplace_back(dd.inequalities.row(i).begin(), dd.inequalities.row(i).end());
      for (std::size_t i = 0; i < dd.equations.rows(); ++i) {
        oracle::Row r(dd.equations.row(i).begin(), dd.equations.row(i).end()), neg;
        for (const auto& x : r) neg.push_back(-x);
        rows.push_back(r);
        rows.push_back(neg);
      }
      const std::size_t brute = oracle::box_filter(rows, {0, 0, 0, 0}, {5, 5, 5, 5}).size();
      auto p = Polytope<Q>::from_v(v);
      for (auto m : {LatticeMethod::bbox, LatticeMethod::projection, LatticeMethod::hilbert}) ok = ok && count(p, m) == brute;
      std::vector<std::vector<Q>> verts;
      auto vv = vertices_of(dd);
      for (std::size_t i = 0; i < vv.points.rows(); ++i) verts.emplace_back(vv.points.row(i).begin() + 1, vv.points.row(i).end());
      Xorshift64Star rng(seed * 7919);
      for (int k = 0; k < 5; ++k) {
        oracle::Row obj{0};
        for (int j = 0; j < 4; ++j) obj.push_back(Q(Integer(static_cast<long>(rng.below(21)) - 10)));
        auto r = solve_lp(LinearProgram<Q>{dd, Vector<Q>(obj.begin(), obj.end()), Sense::maximize});
        ok = ok && r.status == LpStatus::optimal && *r.optimal_value == oracle::max_over(obj, verts);
      }
      mismatches += !ok;
    }
    c.equal(mismatches, std::size_t(0), "instances with a disagreement");
    c.note << "50 R(4,20) instances: dd = bb, vertices(facets) = irredundant input, counts = brute force, LP = max over vertices";
  });

  run(10, [](Check& c) {
#ifdef POLYHULL_CLI
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("polyhull_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string cli = POLYHULL_CLI;
    const std::vector<std::string> cmds{
        "gen rbox --d 4 --n 20 --seed 5 --out @/box.poly",
        "hull @/box.poly --algo bb --order random:42 --out @/hull.poly",
        "vertices @/hull.poly --algo dd --out @/verts.poly",
        "gen knapsack-fib --d 5 --b 40 --out @/f5.poly",
        "integer-hull @/f5.poly --method projection --out @/ih.poly",
        "points @/f5.poly --method bbox --out @/pts.poly",
        "bench --suite rbox --reps 2 --seed 3 --no-timing --out @/rbox.csv",
        "bench --suite matching --no-timing --out @/matching.csv",
    };
    std::vector<std::string> outputs{"box.poly", "hull.poly", "verts.poly", "f5.poly", "ih.poly", "pts.poly", "rbox.csv", "matching.csv"};
    std::vector<std::string> first;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::string cmd : cmds) {
        for (std::size_t at; (at = cmd.find('@')) != std::string::npos;) cmd.replace(at, 1, dir.string());
        int rc = std::system(("\"" + cli + "\" " + cmd).c_str());
        c.equal(rc, 0, "exit status of '" + cmd + "'");
      }
      for (std::size_t i = 0; i < outputs.size(); ++i) {
        std::string bytes = slurp(dir / outputs[i]);
        c.expect(!bytes.empty(), outputs[i] + " is empty");
        if (pass == 0)
          first.push_back(bytes);
        else
          c.expect(bytes == first[i], outputs[i] + " differs between runs");
      }
    }
    fs::remove_all(dir);
    c.note << "two CLI runs (gen, hull with random order, vertices, integer-hull, points, bench CSV) are byte-identical";
#else
    c.expect(false, "CLI path not configured");
#endif
  });

  return failures == 0 ? 0 : 1;
}
