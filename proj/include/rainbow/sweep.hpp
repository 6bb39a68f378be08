#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rainbow {

enum class SweepMethod { Exact, Sdrg, Both };

const char* to_string(SweepMethod m);
SweepMethod sweep_method_from_string(const std::string& s);

struct SweepConfig {
  std::vector<int> L_values;
  std::vector<double> h_values;  // exactly one of h_values / z_values is non-empty
  std::vector<double> z_values;
  std::vector<double> renyi_orders{1.0};
  SweepMethod method = SweepMethod::Exact;

  /// Throws InvalidArgument for inconsistent settings. Points that trip the
  /// underflow guard are reported per point by run_sweep.
  void validate() const;
};

struct SweepRow {
  int L = 0;
  double h = 0.0;
  double z = 0.0;
  double n = 1.0;
  std::string method;  // "exact" or "sdrg"
  double S = 0.0;      // half-chain entropy, nats
};

struct SweepFailure {
  int L = 0;
  double h = 0.0;
  std::string message;
  bool underflow = false;  // tripped the coupling underflow guard
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by (L, h/z, n, method) in input order
  std::vector<SweepFailure> failures;
};

/// Evaluates every (L, h or z) point on a pool of `workers` threads; output
/// order does not depend on scheduling.
SweepResult run_sweep(const SweepConfig& config, unsigned workers = 1);

/// "16:128" (inclusive), "16:128:4", "4,8,16:20" ...
std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace rainbow
