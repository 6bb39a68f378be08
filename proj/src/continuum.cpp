#include "rainbow/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rainbow/chain_model.hpp"
#include "rainbow/entanglement.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr double kOverflowLimit = 700.0;
constexpr double kSeriesThreshold = 1e-8;

void check_h(double h, const char* what) {
  if (!std::isfinite(h) || h < 0.0)
    throw InvalidArgument(std::string(what) + ": h must be finite and >= 0");
}

// (e^{u} - 1)/u, with its Taylor series near u = 0.
double expm1_ratio(double u) {
  if (std::abs(u) < kSeriesThreshold) return 1.0 + u / 2.0 + u * u / 6.0;
  return std::expm1(u) / u;
}

}  // namespace

double coordinate_map(double x, double h) {
  check_h(h, "coordinate_map");
  if (!std::isfinite(x)) throw InvalidArgument("coordinate_map: x must be finite");
  const double ax = std::abs(x);
  if (h * ax > kOverflowLimit)
    throw UnderflowGuardError("coordinate_map: h|x| = " + std::to_string(h * ax) + " exceeds 700");
  return std::copysign(ax * expm1_ratio(h * ax), x);
}

double inverse_coordinate_map(double y, double h) {
  check_h(h, "inverse_coordinate_map");
  if (!std::isfinite(y)) throw InvalidArgument("inverse_coordinate_map: y must be finite");
  const double ay = std::abs(y);
  const double u = h * ay;
  double x;
  if (u < kSeriesThreshold)
    x = ay * (1.0 - u / 2.0 + u * u / 3.0);
  else
    x = std::log1p(u) / h;
  return std::copysign(x, y);
}

double predicted_entropy_weak(double L, double h, double c, double c_prime) {
  check_h(h, "predicted_entropy_weak");
  if (!(L >= 1.0)) throw InvalidArgument("predicted_entropy_weak: L must be >= 1");
  if (h * L > kOverflowLimit)
    throw UnderflowGuardError("predicted_entropy_weak: hL = " + std::to_string(h * L) +
                              " exceeds 700");
  // (e^{hL} - 1)/h = L·expm1_ratio(hL)
  return c / 6.0 * (std::log(L) + std::log(expm1_ratio(h * L))) + c_prime;
}

double effective_temperature(double h) {
  check_h(h, "effective_temperature");
  return h / (2.0 * std::numbers::pi);
}

ScalarCurvature scalar_curvature(double h) {
  check_h(h, "scalar_curvature");
  return {-(h * h), h > 0.0};
}

double ContinuumPrediction::max_abs_deviation() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, std::abs(r.deviation));
  return m;
}

ContinuumPrediction compare_weak_prediction(double h, double c, double c_prime,
                                            const std::vector<int>& L_values, double J0) {
  ContinuumPrediction out;
  out.h = h;
  out.c = c;
  out.c_prime = c_prime;
  out.effective_temperature = effective_temperature(h);
  out.curvature = scalar_curvature(h);
  for (int L : L_values) {
    ComparisonRow row;
    row.L = L;
    row.h = h;
    row.S_exact = half_chain_entropy(make_chain(L, h, J0));
    row.S_predicted = predicted_entropy_weak(L, h, c, c_prime);
    row.deviation = row.S_exact - row.S_predicted;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace rainbow
