#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "rainbow/chain_model.hpp"

namespace testing {

inline constexpr int kRandomInstances = 120;

/// Seeded generator; each test case picks its own seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  /// A chain that diagonalizes comfortably: L in [1, max_L], h in [0, max_h].
  rainbow::ChainSpec chain(int max_L = 24, double max_h = 1.5) {
    const int L = integer(1, max_L);
    const double h = coin() ? 0.0 : uniform(0.0, max_h);
    const double J0 = std::exp(uniform(-2.0, 2.0));
    return rainbow::make_chain(L, h, J0);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace testing
