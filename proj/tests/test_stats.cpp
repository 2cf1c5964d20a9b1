#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "polyhull/bench.hpp"

using namespace polyhull;
using Q = Rational;

TEST_CASE("summary statistics") {
  auto one = stats({Q(12816)});
  CHECK(one.min == 12816);
  CHECK(one.max == 12816);
  CHECK(one.mean == 12816);
  CHECK(one.median == 12816);
  CHECK(one.stddev == "0.000");
  auto three = stats({Q(3), Q(1), Q(2)});
  CHECK(three.mean == 2);
  CHECK(three.median == 2);
  CHECK(three.stddev == "1.000");
  CHECK(stats({Q(5), Q(5), Q(5), Q(5)}).stddev == "0.000");
  auto even = stats({Q(1), Q(2), Q(4), Q(10)});
  CHECK(even.median == 3);
  CHECK(even.mean == Q(17, 4));
  CHECK_THROWS_AS(stats({}), InvalidArgument);
}

TEST_CASE("order statistics on many samples") {
  std::vector<Q> v;
  for (int i = 0; i < 50; ++i) v.push_back(Q(Integer((i * 37) % 101)));
  auto s = stats(v);
  CHECK(s.min <= s.median);
  CHECK(s.median <= s.max);
  CHECK(s.n == 50);
}

TEST_CASE("decimal square roots") {
  CHECK(sqrt_decimal(Q(2), 3) == "1.414");
  CHECK(sqrt_decimal(Q(1, 4), 3) == "0.500");
  CHECK(sqrt_decimal(Q(0), 3) == "0.000");
  CHECK(sqrt_decimal(Q(8655, 1), 3) == "93.032");
  CHECK(sqrt_decimal(Q(99), 0) == "10");
}

TEST_CASE("csv output is sorted and round-trips exact values") {
  std::vector<BenchRecord> r{{"b", "n=10", "count", "bbox", "given", "-", "points", "7", std::nullopt},
                             {"b", "n=9", "count", "bbox", "given", "-", "points", "22/7", 0.5},
                             {"a", "x,y", "facets", "dd", "given", "1", "facets", "3", std::nullopt}};
  std::ostringstream os;
  write_csv(os, r);
  CHECK(os.str() ==
        "family,params,operation,algorithm,order,seed,metric,value,seconds\n"
        "a,\"x,y\",facets,dd,given,1,facets,3,\n"
        "b,n=9,count,bbox,given,-,points,22/7,0.500000\n"
        "b,n=10,count,bbox,given,-,points,7,\n");
  CHECK(Q::parse("22/7") == Q(22, 7));
}

TEST_CASE("bench suite records agree across algorithms") {
  BenchOptions opt;
  opt.timing = false;
  auto recs = bench_suite("matching", opt);
  std::map<std::string, std::set<std::string>> by_instance;
  for (const auto& r : recs)
    if (r.metric == "lattice_points") by_instance[r.params].insert(r.value);
  CHECK(by_instance.size() == 3);
  for (const auto& [k, vals] : by_instance) CHECK(vals.size() == 1);
  CHECK(*by_instance["K6"].begin() == "76");
  CHECK_THROWS_AS(bench_suite("nope", opt), InvalidArgument);
}

TEST_CASE("repetitions add summary rows") {
  BenchOptions opt;
  opt.timing = false;
  opt.reps = 3;
  auto recs = bench_suite("rbox", opt);
  bool found = false;
  for (const auto& r : recs)
    if (r.seed == "summary" && r.algorithm == "dd" && r.metric == "facets:n") found = r.value == "3";
  CHECK(found);
}
