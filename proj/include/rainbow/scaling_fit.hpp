#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/linalg.hpp"

namespace rainbow {

enum class FitModelId { CftHalf, BlockScaling, ZFamily };

const char* to_string(FitModelId id);
/// Accepts "CFT_HALF", "BLOCK_SCALING", "Z_FAMILY" (case-insensitive).
FitModelId fit_model_from_string(std::string_view name);

struct FitResult {
  FitModelId model = FitModelId::CftHalf;
  // Reported coefficients, ordered as the model defines them.
  std::vector<std::pair<std::string, double>> coefficients;
  // Raw least-squares solution, one entry per basis column.
  std::vector<double> basis_coefficients;
  double residual_rms = 0.0;
  double condition_estimate = 1.0;
  std::size_t n_samples = 0;
  bool ill_conditioned = false;  // condition_estimate > 1e8

  /// Throws InvalidArgument for an unknown name.
  double coefficient(std::string_view name) const;
};

struct SizeEntropy {
  int L = 0;
  double S = 0.0;
};

struct BlockEntropy {
  std::size_t ell = 0;
  double S = 0.0;
};

struct FitOptions {
  double luttinger_K = 1.0;
};

struct LeastSquaresSolution {
  std::vector<double> x;
  std::vector<double> residuals;  // b - A x
  double condition = 1.0;         // σ_max / σ_min of A
};

/// min ||A x - b||₂ by Householder QR. Throws RankDeficiencyError when
/// σ_min <= 1e-13·σ_max.
LeastSquaresSolution solve_least_squares(const Matrix& a, std::span<const double> b);

/// S(L) = (c/6) log L + c' + f cos(πL)/L^K.  Coefficients: c, c_prime, f.
FitResult fit_cft_halfchain(std::span<const SizeEntropy> samples, const FitOptions& opts = {});

/// S(ℓ) = c(1+1/n)/12 · log[(4L/π) sin(πℓ/2L)] + c'_n
///        + f_n cos(πℓ) [(8L/π) sin(πℓ/2L)]^(-K/n).
/// Coefficients: c, c_prime_n, f_n.
FitResult fit_block_scaling(std::span<const BlockEntropy> samples, int L, double n,
                            const FitOptions& opts = {});

/// Same basis as fit_cft_halfchain for data at fixed z = hL.
/// Coefficients: c_z, d_z, f_z.
FitResult fit_z_family(std::span<const SizeEntropy> samples, const FitOptions& opts = {});

/// Oscillation amplitude 2/(1-n) · Γ(1/2 + 1/2n) / Γ(1/2 - 1/2n); exactly 1 at n = 1.
/// Throws PoleError when 1/2 - 1/2n is a non-positive integer, InvalidArgument for n <= 0.
double f_n_analytic(double n);

/// cos(πk) for integer k.
inline double parity_sign(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

}  // namespace rainbow
