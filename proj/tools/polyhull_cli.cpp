#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polyhull/bench.hpp"
#include "polyhull/gen.hpp"
#include "polyhull/hilbert.hpp"
#include "polyhull/lattice.hpp"
#include "polyhull/poly_io.hpp"

using namespace polyhull;

namespace {

/** Usage problems detected after option parsing; mapped to exit code 2. */
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string path;

  template <class F>
  void write(F&& body) const {
    if (path.empty() || path == "-") {
      body(std::cout);
      std::cout.flush();
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    body(f);
  }
};

AnyPolyData read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_poly(std::cin);
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_poly(f);
}

template <class S>
Polytope<S> to_polytope(const PolyData<S>& p) {
  return p.is_h ? Polytope<S>::from_h(p.h) : Polytope<S>::from_v(p.v);
}

const PolyData<Rational>& rational_only(const AnyPolyData& any, const char* what) {
  if (auto* r = std::get_if<PolyData<Rational>>(&any)) return *r;
  throw InvalidArgument(std::string(what) + " needs rational coefficients");
}

template <class S>
Vector<S> parse_objective(const std::string& text, std::size_t d) {
  Vector<S> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      c.push_back(parse_scalar<S>(tok));
    } catch (const Error& e) {
      throw UsageError(std::string("bad objective entry: ") + e.what());
    }
  }
  if (c.size() != d + 1)
    throw UsageError("objective needs " + std::to_string(d + 1) + " entries c0,...,c" + std::to_string(d));
  return c;
}

template <class S>
void print_row(std::ostream& out, const char* label, const Vector<S>& v) {
  out << label;
  for (const auto& x : v) out << ' ' << x.to_string();
  out << '\n';
}

HullOptions hull_options(const std::string& algo, const std::string& order) {
  HullOptions o;
  try {
    o.algorithm = parse_algorithm(algo);
    o.order = InsertionOrder::parse(order);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return o;
}

LatticeMethod lattice_method(const std::string& m) {
  try {
    return parse_lattice_method(m);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

EnumerationOptions enum_options(std::optional<std::size_t> limit) {
  EnumerationOptions o;
  if (limit) o.point_limit = *limit;
  return o;
}

Rational parse_rational_arg(const std::string& s, const char* name) {
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw UsageError(std::string("bad value for ") + name + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral computations: convex hulls, lattice points, linear programs."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polyhull 1.0");

  std::string input, out_path;
  std::string algo = "dd", order = "given", method = "bbox";
  std::optional<std::size_t> limit_points;

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Write a generated instance as a .poly file");
  gen->require_subcommand(1);
  gen->add_option("--out", out_path, "Output file (default stdout)");
  std::size_t d = 0, m = 0, n = 0;
  std::string b_str, t_str = "sym", graph, edges_file, a_s, b_s, c_s;
  std::uint64_t seed = 1;

  auto* g_knap = gen->add_subcommand("knapsack-fib", "Fibonacci knapsack F_d(b)");
  g_knap->add_option("--d", d, "Dimension")->required();
  g_knap->add_option("--b", b_str, "Right-hand side")->required();
  auto* g_cut = gen->add_subcommand("cut", "Cut polytope of a graph");
  g_cut->add_option("--graph", graph, "Gk:<k> | P:<n> | C:<n> | K:<n>");
  g_cut->add_option("--edges", edges_file, "Edge list file: 'n m' then m lines 'u v'");
  auto* g_km = gen->add_subcommand("klee-minty", "Klee-Minty cube");
  g_km->add_option("--d", d, "Dimension")->required();
  g_km->add_option("--t", t_str, "Rational parameter or 'sym' for the Puiseux variable t");
  auto* g_vor = gen->add_subcommand("voronoi", "Lifted Voronoi polyhedron of random sites");
  g_vor->add_option("--d", d, "Dimension of the lifted space")->required();
  g_vor->add_option("--m", m, "Number of sites")->required();
  g_vor->add_option("--seed", seed, "Seed");
  auto* g_rbox = gen->add_subcommand("rbox", "Random points of {0,...,5}^d");
  g_rbox->add_option("--d", d, "Dimension")->required();
  g_rbox->add_option("--n", n, "Number of points")->required();
  g_rbox->add_option("--seed", seed, "Seed");
  auto* g_match = gen->add_subcommand("matching", "Matching polytope of K_n");
  g_match->add_option("--n", n, "Number of nodes")->required();
  auto* g_hard = gen->add_subcommand("hard-simplex", "conv(0,e1,e2,e1+e2+a e3,e1+e2+b e4,e1+e2+c e5)");
  g_hard->add_option("--a", a_s)->required();
  g_hard->add_option("--b", b_s)->required();
  g_hard->add_option("--c", c_s)->required();
  for (auto* s : {g_knap, g_cut, g_km, g_vor, g_rbox, g_match, g_hard})
    s->add_option("--out", out_path, "Output file (default stdout)");

  // conversions ------------------------------------------------------------
  auto add_common = [&](CLI::App* s) {
    s->add_option("input", input, "Input .poly file (default stdin)");
    s->add_option("--out", out_path, "Output file (default stdout)");
  };
  auto* hull = app.add_subcommand("hull", "Facets of a polyhedron");
  add_common(hull);
  hull->add_option("--algo", algo, "dd | bb");
  hull->add_option("--order", order, "given | random:<seed> | vertices-first | lex");
  auto* verts = app.add_subcommand("vertices", "Vertices, rays and lineality of a polyhedron");
  add_common(verts);
  verts->add_option("--algo", algo, "dd | bb");
  verts->add_option("--order", order, "given | random:<seed> | vertices-first | lex");

  // lattice points -----------------------------------------------------------
  auto* points = app.add_subcommand("points", "Lattice points of a polytope as a V file");
  auto* cnt = app.add_subcommand("count", "Number of lattice points");
  auto* ihull = app.add_subcommand("integer-hull", "Convex hull of the lattice points");
  bool ih_vertices = false;
  for (auto* s : {points, cnt, ihull}) {
    add_common(s);
    s->add_option("--method", method, "bbox | projection | hilbert | zero-one");
    s->add_option("--limit-points", limit_points, "Abort when more points are found");
  }
  ihull->add_flag("--vertices", ih_vertices, "Write the vertices instead of the facets");

  // lp / volume ---------------------------------------------------------------
  auto* lp = app.add_subcommand("lp", "Optimize a linear objective");
  add_common(lp);
  std::string objective;
  bool maximize = false, minimize = false, integer = false;
  lp->add_option("--objective", objective, "c0,c1,...,cd for c0 + c.x")->required();
  auto* fmax = lp->add_flag("--max", maximize, "Maximize (default)");
  lp->add_flag("--min", minimize, "Minimize")->excludes(fmax);
  lp->add_flag("--integer", integer, "Optimize over the integer hull");
  lp->add_option("--method", method, "Lattice method for --integer");

  auto* vol = app.add_subcommand("volume", "Volume of a bounded polytope in its affine hull");
  add_common(vol);
  vol->add_option("--order", order, "Insertion order of the triangulation");
  std::string eval_at;
  vol->add_option("--eval", eval_at, "Also print the value at t = <rational>");

  // bench -------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite and write CSV");
  BenchOptions bopt;
  std::string suite;
  bool no_timing = false;
  bench->add_option("--suite", suite, "cut | knapsack-hull | knapsack-count | voronoi | rbox | matching")->required();
  bench->add_option("--reps", bopt.reps, "Repetitions");
  bench->add_option("--budget-seconds", bopt.budget_seconds, "Per-run wall time cap (0 = none)");
  bench->add_option("--seed", bopt.seed, "Base seed");
  bench->add_option("--max-k", bopt.cut_max_k, "Largest k of the cut suite's G_k family");
  bench->add_option("--out", out_path, "Output CSV (default stdout)");
  bench->add_flag("--no-timing", no_timing, "Leave the seconds column empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Output out{out_path};
  try {
    if (gen->parsed()) {
      if (g_knap->parsed()) {
        auto h = fibonacci_knapsack(d, parse_rational_arg(b_str, "--b"));
        out.write([&](std::ostream& os) { write_poly(os, h); });
      } else if (g_cut->parsed()) {
        if (graph.empty() == edges_file.empty()) throw UsageError("gen cut needs exactly one of --graph and --edges");
        Graph g;
        if (!graph.empty()) {
          try {
            g = Graph::parse_family(graph);
          } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
          }
        } else {
          std::ifstream f(edges_file);
          if (!f) throw UsageError("cannot open '" + edges_file + "'");
          std::stringstream ss;
          ss << f.rdbuf();
          g = Graph::parse_edge_list(ss.str());
        }
        auto v = cut_polytope(g);
        out.write([&](std::ostream& os) { write_poly(os, v); });
      } else if (g_km->parsed()) {
        if (t_str == "sym") {
          auto h = klee_minty(d, PuiseuxFraction::parse("t"));
          out.write([&](std::ostream& os) { write_poly(os, h); });
        } else {
          auto h = klee_minty(d, parse_rational_arg(t_str, "--t"));
          out.write([&](std::ostream& os) { write_poly(os, h); });
        }
      } else if (g_vor->parsed()) {
        auto h = voronoi_lift(random_sites(d, m, seed));
        out.write([&](std::ostream& os) { write_poly(os, h); });
      } else if (g_rbox->parsed()) {
        auto v = random_box(d, n, seed);
        out.write([&](std::ostream& os) { write_poly(os, v); });
      } else if (g_match->parsed()) {
        auto h = matching_polytope(Graph::complete(n));
        out.write([&](std::ostream& os) { write_poly(os, h); });
      } else if (g_hard->parsed()) {
        auto as = parse_rational_arg(a_s, "--a"), bs = parse_rational_arg(b_s, "--b"), cs = parse_rational_arg(c_s, "--c");
        if (!as.is_integer() || !bs.is_integer() || !cs.is_integer()) throw UsageError("hard-simplex needs integers");
        auto v = hard_simplex(as.numerator(), bs.numerator(), cs.numerator());
        out.write([&](std::ostream& os) { write_poly(os, v); });
      }
      return 0;
    }

    if (bench->parsed()) {
      bopt.timing = !no_timing;
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
      auto records = bench_suite(suite, bopt);
      out.write([&](std::ostream& os) { write_csv(os, records); });
      return 0;
    }

    AnyPolyData data = read_input(input);

    if (hull->parsed() || verts->parsed()) {
      const HullOptions opt = hull_options(algo, order);
      std::visit(
          [&](const auto& p) {
            if (hull->parsed()) {
              auto h = p.is_h ? facets_of(vertices_of(p.h, opt), opt) : facets_of(p.v, opt);
              out.write([&](std::ostream& os) { write_poly(os, h); });
            } else {
              auto v = p.is_h ? vertices_of(p.h, opt) : vertices_of(facets_of(p.v, opt), opt);
              out.write([&](std::ostream& os) { write_poly(os, v); });
            }
          },
          data);
      return 0;
    }

    if (points->parsed() || cnt->parsed() || ihull->parsed()) {
      const LatticeMethod lm = lattice_method(method);
      const auto& p = rational_only(data, "lattice point enumeration");
      const auto opt = enum_options(limit_points);
      if (lm == LatticeMethod::zero_one && !p.is_h) throw UsageError("zero-one enumeration needs an H file");
      auto poly = to_polytope(p);
      auto run = [&] { return lm == LatticeMethod::zero_one ? enumerate_zero_one(p.h, opt) : enumerate(poly, lm, opt); };
      if (cnt->parsed()) {
        auto s = run();
        out.write([&](std::ostream& os) { os << s.count << '\n'; });
      } else if (points->parsed()) {
        auto s = run();
        VRep<Rational> v(s.points, {}, {}, p.ambient_dim());
        out.write([&](std::ostream& os) { write_poly(os, v); });
      } else {
        if (lm == LatticeMethod::zero_one) throw UsageError("integer-hull supports bbox, projection and hilbert");
        auto ih = integer_hull(poly, lm, opt);
        out.write([&](std::ostream& os) {
          if (ih_vertices)
            write_poly(os, ih.v());
          else
            write_poly(os, ih.h());
        });
      }
      return 0;
    }

    if (lp->parsed()) {
      const Sense sense = minimize ? Sense::minimize : Sense::maximize;
      std::visit(
          [&](const auto& p) {
            using S = std::remove_cvref_t<decltype(p.h.inequalities(0, 0))>;
            const std::size_t dim = p.ambient_dim();
            Vector<S> c = parse_objective<S>(objective, dim);
            HRep<S> region = p.is_h ? p.h : facets_of(p.v);
            if (integer) {
              if constexpr (std::is_same_v<S, Rational>) {
                region = integer_hull(to_polytope(p), lattice_method(method)).h();
              } else {
                throw InvalidArgument("--integer needs rational coefficients");
              }
            }
            auto res = solve_lp(LinearProgram<S>{region, c, sense});
            if (res.status == LpStatus::infeasible) throw InvalidArgument("linear program is infeasible");
            if (res.status == LpStatus::unbounded) throw UnboundedError("linear program is unbounded");
            out.write([&](std::ostream& os) {
              os << "value " << res.optimal_value->to_string() << '\n';
              print_row(os, "vertex", *res.optimal_vertex);
            });
          },
          data);
      return 0;
    }

    if (vol->parsed()) {
      InsertionOrder ord;
      try {
        ord = InsertionOrder::parse(order);
      } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
      }
      std::visit(
          [&](const auto& p) {
            using S = std::remove_cvref_t<decltype(p.h.inequalities(0, 0))>;
            VRep<S> v = p.is_h ? vertices_of(p.h) : p.v;
            if (v.is_empty()) throw InvalidArgument("volume of the empty set");
            if (v.rays.rows() || v.lineality.rows()) throw UnboundedError("volume of an unbounded polyhedron");
            S vol_s = volume_of(v, ord);
            std::string at;
            if (!eval_at.empty()) {
              Rational t0 = parse_rational_arg(eval_at, "--eval");
              if constexpr (std::is_same_v<S, Rational>)
                at = vol_s.to_string();
              else
                at = vol_s.evaluate(t0).to_string();
            }
            out.write([&](std::ostream& os) {
              os << "volume " << vol_s.to_string() << '\n';
              if (!at.empty()) os << "value " << at << '\n';
            });
          },
          data);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
