#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyhull/rational.hpp"

namespace polyhull {

struct StatSummary {
  std::size_t n = 0;
  Rational min, max, mean, median;
  std::string stddev;  // sample standard deviation, rounded to 3 decimals
};

/** Order statistics, exact mean and median; n >= 1. */
StatSummary stats(const std::vector<Rational>& values);

/** sqrt(x) rounded half up to `places` decimals; x >= 0. */
std::string sqrt_decimal(const Rational& x, int places);

struct BenchRecord {
  std::string family, params, operation, algorithm, order, seed, metric, value;
  std::optional<double> seconds;
};

struct BenchOptions {
  std::size_t reps = 1;
  double budget_seconds = 0;  // 0 disables the per-instance cap
  std::uint64_t seed = 1;
  bool timing = true;
  std::size_t cut_max_k = 3;
};

const std::vector<std::string>& suite_names();

/**
 * Runs every algorithm/method/order of a suite on its instance grid.  With a
 * budget each run happens in a child process that is killed on timeout;
 * such runs produce a `status` record with value `timeout` or `memout`.
 * Groups with several repetitions also get min/max/mean/median/stddev rows.
 */
std::vector<BenchRecord> bench_suite(std::string_view name, const BenchOptions& opt);

extern const char* const kCsvHeader;

/** Writes the header and the records in sorted order. */
void write_csv(std::ostream& out, std::vector<BenchRecord> records);

}  // namespace polyhull
