#include "polyhull/bench.hpp"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <new>
#include <ostream>
#include <sstream>
#include <tuple>

#include "polyhull/gen.hpp"
#include "polyhull/lattice.hpp"

namespace polyhull {

StatSummary stats(const std::vector<Rational>& values) {
  if (values.empty()) throw InvalidArgument("statistics of an empty sample");
  std::vector<Rational> v = values;
  std::sort(v.begin(), v.end());
  StatSummary s;
  s.n = v.size();
  s.min = v.front();
  s.max = v.back();
  Rational sum = 0;
  for (const auto& x : v) sum += x;
  s.mean = sum / Rational(Integer(s.n));
  s.median = s.n % 2 ? v[s.n / 2] : (v[s.n / 2 - 1] + v[s.n / 2]) / Rational(2);
  Rational sq = 0;
  for (const auto& x : v) sq += (x - s.mean) * (x - s.mean);
  s.stddev = sqrt_decimal(s.n > 1 ? sq / Rational(Integer(s.n - 1)) : Rational(0), 3);
  return s;
}

std::string sqrt_decimal(const Rational& x, int places) {
  if (x.sign() < 0) throw InvalidArgument("square root of a negative number");
  Integer scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // round(sqrt(x) * scale) = floor((floor(sqrt(4 x scale^2)) + 1) / 2)
  Integer four = (x * Rational(Integer(4 * scale * scale))).floor();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), four.get_mpz_t());
  Integer n = (root + 1) / 2;
  std::string digits = n.get_str();
  if (places == 0) return digits;
  if (digits.size() <= static_cast<std::size_t>(places)) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return digits;
}

namespace {

using Metrics = std::vector<std::pair<std::string, std::string>>;

struct Task {
  std::string family, params, operation, algorithm, order, seed;
  std::function<Metrics()> run;
};

struct Outcome {
  Metrics metrics;
  std::string status;  // empty on success
  double seconds = 0;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome run_inline(const Task& t) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    o.metrics = t.run();
  } catch (const PointLimitExceeded&) {
    o.status = "memout";
  } catch (const std::bad_alloc&) {
    o.status = "memout";
  } catch (const std::exception& e) {
    o.status = std::string("error: ") + e.what();
  }
  o.seconds = seconds_since(t0);
  return o;
}

void write_all(int fd, const std::string& s) {
  std::size_t off = 0;
  while (off < s.size()) {
    ssize_t n = ::write(fd, s.data() + off, s.size() - off);
    if (n <= 0) return;
    off += static_cast<std::size_t>(n);
  }
}

/** Runs the task in a child process killed after `budget` seconds. */
Outcome run_isolated(const Task& t, double budget) {
  int fds[2];
  if (::pipe(fds) != 0) return run_inline(t);
  pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    return run_inline(t);
  }
  if (pid == 0) {
    ::close(fds[0]);
    Outcome o = run_inline(t);
    std::ostringstream out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", o.seconds);
    out << buf << '\n' << o.status << '\n';
    for (const auto& [k, v] : o.metrics) out << k << '\t' << v << '\n';
    write_all(fds[1], out.str());
    ::close(fds[1]);
    ::_exit(0);
  }
  ::close(fds[1]);
  auto t0 = std::chrono::steady_clock::now();
  std::string data;
  bool timed_out = false;
  for (;;) {
    double left = budget - seconds_since(t0);
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    int r = ::poll(&p, 1, static_cast<int>(std::min(left * 1000.0, 1000.0)) + 1);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) continue;
    char buf[4096];
    ssize_t n = ::read(fds[0], buf, sizeof buf);
    if (n <= 0) break;
    data.append(buf, static_cast<std::size_t>(n));
  }
  ::close(fds[0]);
  Outcome o;
  if (timed_out) {
    ::kill(pid, SIGKILL);
    ::waitpid(pid, nullptr, 0);
    o.status = "timeout";
    o.seconds = budget;
    return o;
  }
  int wstatus = 0;
  ::waitpid(pid, &wstatus, 0);
  std::istringstream in(data);
  std::string line;
  if (!WIFEXITED(wstatus) || !std::getline(in, line)) {
    // killed by the kernel, typically the out-of-memory killer
    o.status = "memout";
    o.seconds = seconds_since(t0);
    return o;
  }
  o.seconds = std::stod(line);
  std::getline(in, o.status);
  while (std::getline(in, line)) {
    auto tab = line.find('\t');
    if (tab != std::string::npos) o.metrics.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return o;
}

std::string count_str(std::size_t n) { return std::to_string(n); }

Metrics hull_metrics(const VRep<Rational>& v, Algorithm algo, const InsertionOrder& order) {
  Metrics m{{"points", count_str(v.points.rows())}};
  if (algo == Algorithm::bb) {
    auto res = beneath_beyond(v.points, order);
    m.emplace_back("facets", count_str(res.facets.inequalities.rows()));
    m.emplace_back("simplices", count_str(res.triangulation.size()));
  } else {
    m.emplace_back("facets", count_str(facets_of(v).inequalities.rows()));
  }
  return m;
}

// the random order is listed as "random" with its seed in the seed column
void add_hull_tasks(std::vector<Task>& tasks, const std::string& family, const std::string& params,
                    std::function<VRep<Rational>()> make, std::uint64_t seed, const std::string& seed_col) {
  tasks.push_back({family, params, "facets", "dd", "given", seed_col,
                   [make] { return hull_metrics(make(), Algorithm::dd, {}); }});
  for (const char* o : {"given", "random", "vertices-first", "lex"}) {
    const bool rnd = std::string_view(o) == "random";
    InsertionOrder order = rnd ? InsertionOrder::random(seed) : InsertionOrder::parse(o);
    tasks.push_back({family, params, "facets", "bb", o, rnd ? std::to_string(seed) : seed_col,
                     [make, order] { return hull_metrics(make(), Algorithm::bb, order); }});
  }
}

void add_count_tasks(std::vector<Task>& tasks, const std::string& family, const std::string& params,
                     std::function<Polytope<Rational>()> make, const std::vector<LatticeMethod>& methods,
                     const std::string& seed_col) {
  for (LatticeMethod m : methods)
    tasks.push_back({family, params, "count", to_string(m), "given", seed_col,
                     [make, m] { return Metrics{{"lattice_points", count_str(count(make(), m))}}; }});
}

std::vector<Task> suite_tasks(std::string_view name, const BenchOptions& opt, std::size_t rep) {
  std::vector<Task> tasks;
  const std::uint64_t seed = opt.seed + rep;
  // deterministic instances carry no seed
  const std::string seed_col = (name == "voronoi" || name == "rbox") ? std::to_string(seed) : "-";
  if (name == "cut") {
    std::vector<std::string> fams;
    for (std::size_t k = 0; k <= opt.cut_max_k; ++k) fams.push_back("Gk:" + std::to_string(k));
    for (const char* f : {"P:9", "C:9", "K:6"}) fams.push_back(f);
    for (const auto& f : fams)
      add_hull_tasks(tasks, "cut", f, [f] { return cut_polytope(Graph::parse_family(f)); }, seed, seed_col);
  } else if (name == "knapsack-hull") {
    for (int b = 40; b <= 100; b += 10)
      tasks.push_back({"knapsack-fib", "d=5;b=" + std::to_string(b), "integer-hull", "bbox", "given", seed_col, [b] {
                         auto ih = integer_hull(Polytope<Rational>::from_h(fibonacci_knapsack(5, Rational(b))));
                         return Metrics{{"vertices", count_str(ih.v().points.rows())},
                                        {"facets", count_str(ih.h().inequalities.rows())}};
                       }});
  } else if (name == "knapsack-count") {
    for (int b = 40; b <= 100; b += 10)
      add_count_tasks(
          tasks, "knapsack-fib", "d=5;b=" + std::to_string(b),
          [b] { return Polytope<Rational>::from_h(fibonacci_knapsack(5, Rational(b))); },
          {LatticeMethod::bbox, LatticeMethod::projection, LatticeMethod::hilbert}, seed_col);
  } else if (name == "voronoi") {
    tasks.push_back({"voronoi", "d=5;m=100", "vertices", "dd", "given", seed_col, [seed] {
                       auto v = vertices_of(voronoi_lift(random_sites(5, 100, seed)));
                       return Metrics{{"vertices", count_str(v.points.rows())}, {"rays", count_str(v.rays.rows())}};
                     }});
  } else if (name == "rbox") {
    auto make_v = [seed] { return random_box(4, 20, seed); };
    add_hull_tasks(tasks, "rbox", "d=4;n=20", make_v, seed, seed_col);
    add_count_tasks(
        tasks, "rbox", "d=4;n=20", [make_v] { return Polytope<Rational>::from_v(make_v()); },
        {LatticeMethod::bbox, LatticeMethod::projection, LatticeMethod::hilbert}, seed_col);
  } else if (name == "matching") {
    for (std::size_t n = 4; n <= 6; ++n) {
      const std::string params = "K" + std::to_string(n);
      auto make_h = [n] { return matching_polytope(Graph::complete(n)); };
      tasks.push_back({"matching", params, "count", "zero-one", "given", seed_col, [make_h] {
                         return Metrics{{"lattice_points", count_str(enumerate_zero_one(make_h()).count)}};
                       }});
      if (n <= 5)
        add_count_tasks(
            tasks, "matching", params, [make_h] { return Polytope<Rational>::from_h(make_h()); },
            {LatticeMethod::projection}, seed_col);
      tasks.push_back({"matching", params, "vertices", "dd", "given", seed_col,
                       [make_h] { return Metrics{{"vertices", count_str(vertices_of(make_h()).points.rows())}}; }});
    }
  } else {
    throw InvalidArgument("unknown bench suite '" + std::string(name) + "'");
  }
  return tasks;
}

/** Compares strings with embedded digit runs by numeric value. */
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string_view x(a.data() + i, i2 - i), y(b.data() + j, j2 - j);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

auto sort_key(const BenchRecord& r) {
  return std::tie(r.family, r.params, r.operation, r.algorithm, r.order, r.seed, r.metric);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cut", "knapsack-hull", "knapsack-count", "voronoi", "rbox", "matching"};
  return names;
}

std::vector<BenchRecord> bench_suite(std::string_view name, const BenchOptions& opt) {
  if (opt.reps == 0) throw InvalidArgument("bench needs at least one repetition");
  std::vector<BenchRecord> out;
  for (std::size_t rep = 0; rep < opt.reps; ++rep) {
    for (const Task& t : suite_tasks(name, opt, rep)) {
      Outcome o = opt.budget_seconds > 0 ? run_isolated(t, opt.budget_seconds) : run_inline(t);
      BenchRecord base{t.family, t.params, t.operation, t.algorithm, t.order, t.seed, "", "", std::nullopt};
      if (opt.timing) base.seconds = o.seconds;
      if (!o.status.empty()) {
        base.metric = "status";
        base.value = o.status;
        out.push_back(base);
        continue;
      }
      for (const auto& [k, v] : o.metrics) {
        BenchRecord r = base;
        r.metric = k;
        r.value = v;
        out.push_back(std::move(r));
      }
    }
  }
  if (opt.reps > 1) {
    // one summary per (instance family, operation, algorithm, order, metric) across repetitions
    std::map<std::tuple<std::string, std::string, std::string, std::string, std::string, std::string>,
             std::vector<Rational>>
        groups;
    for (const auto& r : out) {
      if (r.metric == "status") continue;
      groups[{r.family, r.params, r.operation, r.algorithm, r.order, r.metric}].push_back(Rational::parse(r.value));
    }
    for (const auto& [key, vals] : groups) {
      if (vals.size() < 2) continue;
      StatSummary s = stats(vals);
      auto [fam, params, op, algo, order, metric] = key;
      auto add = [&](const char* what, std::string v) {
        out.push_back({fam, params, op, algo, order, "summary", metric + ":" + what, std::move(v), std::nullopt});
      };
      add("n", std::to_string(s.n));
      add("min", s.min.to_string());
      add("max", s.max.to_string());
      add("mean", s.mean.to_string());
      add("median", s.median.to_string());
      add("stddev", s.stddev);
    }
  }
  return out;
}

const char* const kCsvHeader = "family,params,operation,algorithm,order,seed,metric,value,seconds";

void write_csv(std::ostream& out, std::vector<BenchRecord> records) {
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    auto ka = sort_key(a), kb = sort_key(b);
    std::string fa[] = {std::get<0>(ka), std::get<1>(ka), std::get<2>(ka), std::get<3>(ka),
                        std::get<4>(ka), std::get<5>(ka), std::get<6>(ka)};
    std::string fb[] = {std::get<0>(kb), std::get<1>(kb), std::get<2>(kb), std::get<3>(kb),
                        std::get<4>(kb), std::get<5>(kb), std::get<6>(kb)};
    for (int i = 0; i < 7; ++i) {
      if (natural_less(fa[i], fb[i])) return true;
      if (natural_less(fb[i], fa[i])) return false;
    }
    return false;
  });
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << csv_field(r.family) << ',' << csv_field(r.params) << ',' << csv_field(r.operation) << ','
        << csv_field(r.algorithm) << ',' << csv_field(r.order) << ',' << csv_field(r.seed) << ','
        << csv_field(r.metric) << ',' << csv_field(r.value) << ',';
    if (r.seconds) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", *r.seconds);
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace polyhull
