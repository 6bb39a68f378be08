#include "rainbow/scaling_fit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/special_functions.hpp"

namespace rainbow {

const char* to_string(FitModelId id) {
  switch (id) {
    case FitModelId::CftHalf:
      return "CFT_HALF";
    case FitModelId::BlockScaling:
      return "BLOCK_SCALING";
    case FitModelId::ZFamily:
      return "Z_FAMILY";
  }
  return "?";
}

FitModelId fit_model_from_string(std::string_view name) {
  std::string upper(name);
  for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (upper == "CFT_HALF") return FitModelId::CftHalf;
  if (upper == "BLOCK_SCALING") return FitModelId::BlockScaling;
  if (upper == "Z_FAMILY") return FitModelId::ZFamily;
  throw InvalidArgument("unknown fit model '" + std::string(name) +
                        "' (expected CFT_HALF, BLOCK_SCALING or Z_FAMILY)");
}

double FitResult::coefficient(std::string_view name) const {
  for (const auto& [key, value] : coefficients)
    if (key == name) return value;
  throw InvalidArgument("FitResult: no coefficient named '" + std::string(name) + "'");
}

namespace {

// Singular values of a small square matrix by one-sided Jacobi.
std::vector<double> singular_values(Matrix a) {
  const std::size_t n = a.cols();
  const std::size_t m = a.rows();
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += a(i, p) * a(i, p);
          beta += a(i, q) * a(i, q);
          gamma += a(i, p) * a(i, q);
        }
        if (gamma == 0.0) continue;
        off = std::max(off, std::abs(gamma) / std::sqrt(alpha * beta));
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double ap = a(i, p);
          const double aq = a(i, q);
          a(i, p) = c * ap - s * aq;
          a(i, q) = s * ap + c * aq;
        }
      }
    }
    if (off < 1e-15) break;
  }
  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a(i, j) * a(i, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end());
  return sv;
}

void require_parity_and_spread(const std::vector<long>& regressors, std::size_t min_distinct,
                               const char* what) {
  const std::set<long> distinct(regressors.begin(), regressors.end());
  bool has_even = false, has_odd = false;
  for (long v : distinct) (v % 2 == 0 ? has_even : has_odd) = true;
  if (distinct.size() < 3 || !has_even || !has_odd)
    throw RankDeficiencyError(std::string(what) + ": design is rank deficient (" +
                              std::to_string(distinct.size()) +
                              " distinct sizes; both parities are required)");
  if (distinct.size() < min_distinct)
    throw InvalidArgument(std::string(what) + ": need at least " + std::to_string(min_distinct) +
                          " distinct sizes, got " + std::to_string(distinct.size()));
}

FitResult fit_log_family(std::span<const SizeEntropy> samples, const FitOptions& opts,
                         FitModelId model, const char* what) {
  if (!(opts.luttinger_K > 0.0)) throw InvalidArgument("fit: Luttinger parameter K must be > 0");
  std::vector<long> sizes;
  for (const auto& smp : samples) {
    if (smp.L < 1) throw InvalidArgument(std::string(what) + ": L must be >= 1");
    if (!std::isfinite(smp.S)) throw InvalidArgument(std::string(what) + ": non-finite entropy");
    sizes.push_back(smp.L);
  }
  require_parity_and_spread(sizes, 4, what);

  Matrix design(samples.size(), 3);
  std::vector<double> rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double L = samples[i].L;
    design(i, 0) = std::log(L);
    design(i, 1) = 1.0;
    design(i, 2) = parity_sign(samples[i].L) / std::pow(L, opts.luttinger_K);
    rhs[i] = samples[i].S;
  }
  const LeastSquaresSolution sol = solve_least_squares(design, rhs);

  FitResult r;
  r.model = model;
  r.n_samples = rhs.size();
  if (model == FitModelId::ZFamily)
    r.coefficients = {{"c_z", 6.0 * sol.x[0]}, {"d_z", sol.x[1]}, {"f_z", sol.x[2]}};
  else
    r.coefficients = {{"c", 6.0 * sol.x[0]}, {"c_prime", sol.x[1]}, {"f", sol.x[2]}};
  r.basis_coefficients = sol.x;
  r.residual_rms = norm2(sol.residuals) / std::sqrt(static_cast<double>(rhs.size()));
  r.condition_estimate = std::max(1.0, sol.condition);
  r.ill_conditioned = r.condition_estimate > 1e8;
  return r;
}

}  // namespace

LeastSquaresSolution solve_least_squares(const Matrix& a, std::span<const double> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw InvalidArgument("least squares: rhs length does not match rows");
  if (m < n) throw RankDeficiencyError("least squares: fewer samples than unknowns");

  Matrix r = a;
  std::vector<double> qtb(b.begin(), b.end());
  std::vector<double> v(m);
  for (std::size_t k = 0; k < n; ++k) {
    double sigma = 0.0;
    for (std::size_t i = k; i < m; ++i) sigma += r(i, k) * r(i, k);
    const double norm = std::sqrt(sigma);
    if (norm == 0.0) continue;
    const double alpha = -std::copysign(norm, r(k, k));
    for (std::size_t i = 0; i < m; ++i) v[i] = i < k ? 0.0 : r(i, k);
    v[k] -= alpha;
    double vtv = 0.0;
    for (std::size_t i = k; i < m; ++i) vtv += v[i] * v[i];
    if (vtv == 0.0) continue;
    const double tau = 2.0 / vtv;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k; i < m; ++i) s += v[i] * r(i, j);
      s *= tau;
      for (std::size_t i = k; i < m; ++i) r(i, j) -= s * v[i];
    }
    double s = 0.0;
    for (std::size_t i = k; i < m; ++i) s += v[i] * qtb[i];
    s *= tau;
    for (std::size_t i = k; i < m; ++i) qtb[i] -= s * v[i];
  }

  Matrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) upper(i, j) = r(i, j);
  const auto sv = singular_values(upper);
  if (!(sv.front() > 1e-13 * sv.back()))
    throw RankDeficiencyError("least squares: design matrix is rank deficient (sigma_min/sigma_max = " +
                              std::to_string(sv.back() > 0 ? sv.front() / sv.back() : 0.0) + ")");

  LeastSquaresSolution sol;
  sol.x.assign(n, 0.0);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = qtb[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= upper(ii, j) * sol.x[j];
    sol.x[ii] = s / upper(ii, ii);
  }
  sol.residuals.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double fit = 0.0;
    for (std::size_t j = 0; j < n; ++j) fit += a(i, j) * sol.x[j];
    sol.residuals[i] = b[i] - fit;
  }
  sol.condition = sv.back() / sv.front();
  return sol;
}

FitResult fit_cft_halfchain(std::span<const SizeEntropy> samples, const FitOptions& opts) {
  return fit_log_family(samples, opts, FitModelId::CftHalf, "fit_cft_halfchain");
}

FitResult fit_z_family(std::span<const SizeEntropy> samples, const FitOptions& opts) {
  return fit_log_family(samples, opts, FitModelId::ZFamily, "fit_z_family");
}

FitResult fit_block_scaling(std::span<const BlockEntropy> samples, int L, double n,
                            const FitOptions& opts) {
  if (L < 1) throw InvalidArgument("fit_block_scaling: L must be >= 1");
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("fit_block_scaling: order n must be > 0");
  if (!(opts.luttinger_K > 0.0)) throw InvalidArgument("fit: Luttinger parameter K must be > 0");
  if (samples.size() < 5)
    throw InvalidArgument("fit_block_scaling: need at least 5 samples, got " +
                          std::to_string(samples.size()));
  std::vector<long> sizes;
  for (const auto& smp : samples) {
    if (smp.ell < 1 || smp.ell > 2 * static_cast<std::size_t>(L) - 1)
      throw InvalidArgument("fit_block_scaling: block size " + std::to_string(smp.ell) +
                            " outside 1..2L-1");
    if (!std::isfinite(smp.S)) throw InvalidArgument("fit_block_scaling: non-finite entropy");
    sizes.push_back(static_cast<long>(smp.ell));
  }
  require_parity_and_spread(sizes, 3, "fit_block_scaling");

  const double Ld = L;
  Matrix design(samples.size(), 3);
  std::vector<double> rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double chord = std::sin(std::numbers::pi * static_cast<double>(samples[i].ell) / (2.0 * Ld));
    design(i, 0) = std::log(4.0 * Ld / std::numbers::pi * chord);
    design(i, 1) = 1.0;
    design(i, 2) = parity_sign(static_cast<long>(samples[i].ell)) *
                   std::pow(8.0 * Ld / std::numbers::pi * chord, -opts.luttinger_K / n);
    rhs[i] = samples[i].S;
  }
  const LeastSquaresSolution sol = solve_least_squares(design, rhs);

  FitResult r;
  r.model = FitModelId::BlockScaling;
  r.coefficients = {{"c", 12.0 * sol.x[0] / (1.0 + 1.0 / n)}, {"c_prime_n", sol.x[1]}, {"f_n", sol.x[2]}};
  r.basis_coefficients = sol.x;
  r.n_samples = samples.size();
  r.residual_rms = norm2(sol.residuals) / std::sqrt(static_cast<double>(rhs.size()));
  r.condition_estimate = std::max(1.0, sol.condition);
  r.ill_conditioned = r.condition_estimate > 1e8;
  return r;
}

double f_n_analytic(double n) {
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("f_n_analytic: n must be > 0");
  if (n == 1.0) return 1.0;
  const double upper = 0.5 + 0.5 / n;
  const double lower = 0.5 - 0.5 / n;
  const double r = std::round(lower);
  if (lower <= 0.0 && std::abs(lower - r) <= 1e-12 * std::max(1.0, std::abs(lower)))
    throw PoleError("f_n_analytic: Gamma pole at 1/2 - 1/(2n) = " + std::to_string(lower));
  return 2.0 / (1.0 - n) * (special::gamma(upper) / special::gamma(lower));
}

}  // namespace rainbow
