#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace polyhull {

/**
 * xorshift64* generator.  The state is seeded through one splitmix64 step so
 * that small seeds (including 0) give well-mixed, nonzero states.
 *
 *   state ^= state >> 12;  state ^= state << 25;  state ^= state >> 27;
 *   output = state * 0x2545F4914F6CDD1D
 */
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z ^= z >> 31;
    state_ = z ? z : 0x9E3779B97F4A7C15ull;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
  }

  /** Uniform integer in [0, bound) by rejection sampling; bound > 0. */
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (std::uint64_t(0) - bound) % bound;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  /** Uniform integer in [lo, hi]. */
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
    if (span == ~std::uint64_t(0)) return static_cast<std::int64_t>(next());
    return lo + static_cast<std::int64_t>(below(span + 1));
  }

 private:
  std::uint64_t state_;
};

/** Fisher-Yates permutation of 0..n-1: for i = n-1 down to 1 swap i with below(i+1). */
inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Xorshift64Star rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace polyhull
