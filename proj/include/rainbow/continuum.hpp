#pragma once

#include <vector>

namespace rainbow {

/// x -> sign(x)·(e^{h|x|} - 1)/h, the identity at h = 0.
/// Throws UnderflowGuardError when h|x| > 700.
double coordinate_map(double x, double h);

/// sign(y)·log(1 + h|y|)/h, the identity at h = 0.
double inverse_coordinate_map(double y, double h);

/// (c/6)·log((e^{hL} - 1)/h) + c_prime; (c/6)·log L + c_prime at h = 0.
double predicted_entropy_weak(double L, double h, double c, double c_prime);

/// T = h / 2π.
double effective_temperature(double h);

struct ScalarCurvature {
  double bulk = 0.0;                // value away from x = 0: -h²
  bool singular_at_origin = false;  // the 4hδ(x) term, present for h > 0
};

ScalarCurvature scalar_curvature(double h);

struct ComparisonRow {
  int L = 0;
  double h = 0.0;
  double S_exact = 0.0;
  double S_predicted = 0.0;
  double deviation = 0.0;  // S_exact - S_predicted
};

struct ContinuumPrediction {
  double h = 0.0;
  double c = 1.0;
  double c_prime = 0.0;
  double effective_temperature = 0.0;
  ScalarCurvature curvature;
  std::vector<ComparisonRow> rows;

  double max_abs_deviation() const;
};

/// Exact half-chain entropies for each L against the weak-disorder formula.
ContinuumPrediction compare_weak_prediction(double h, double c, double c_prime,
                                            const std::vector<int>& L_values, double J0 = 1.0);

}  // namespace rainbow
