#include "rainbow/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow::special {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  if (x > 0.0) return false;
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x));
}

double lanczos_positive(double x) {
  // Γ(x) for x >= 1/2
  const double z = x - 1.0;
  double sum = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i)
    sum += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // t^(z+1/2) e^-t split to delay overflow
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half_power * (half_power * std::exp(-t)) * sum;
}

}  // namespace

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r < 0.0) r += 2.0;         // [0, 2)
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  if (r > 1.0) return -sin_pi(r - 1.0);
  if (r > 0.5) r = 1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x))
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  if (x < 0.5) return std::numbers::pi / (sin_pi(x) * lanczos_positive(1.0 - x));
  if (x > 171.7) return std::numeric_limits<double>::infinity();
  return lanczos_positive(x);
}

}  // namespace rainbow::special
