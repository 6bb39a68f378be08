#include "rainbow/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Block Block::of(std::vector<std::size_t> sites, std::size_t n_sites) {
  if (sites.empty()) throw InvalidArgument("Block: empty site set");
  std::sort(sites.begin(), sites.end());
  if (std::adjacent_find(sites.begin(), sites.end()) != sites.end())
    throw InvalidArgument("Block: duplicate site index");
  if (sites.back() >= n_sites)
    throw InvalidArgument("Block: site " + std::to_string(sites.back()) + " outside chain of " +
                          std::to_string(n_sites) + " sites");
  return Block(std::move(sites), n_sites);
}

Block Block::left(std::size_t ell, std::size_t n_sites) {
  if (ell == 0 || ell > n_sites)
    throw InvalidArgument("Block::left: ell must be in 1.." + std::to_string(n_sites));
  std::vector<std::size_t> s(ell);
  std::iota(s.begin(), s.end(), std::size_t{0});
  return Block(std::move(s), n_sites);
}

Block Block::half_chain(int L) {
  if (L < 1) throw InvalidArgument("Block::half_chain: L must be >= 1");
  return left(static_cast<std::size_t>(L), 2 * static_cast<std::size_t>(L));
}

bool Block::contains(std::size_t site) const {
  return std::binary_search(sites_.begin(), sites_.end(), site);
}

std::vector<std::size_t> Block::complement_sites() const {
  std::vector<std::size_t> out;
  out.reserve(n_sites_ - sites_.size());
  for (std::size_t i = 0; i < n_sites_; ++i)
    if (!contains(i)) out.push_back(i);
  return out;
}

std::vector<double> sanitize_block_spectrum(std::vector<double> nu, const EntropyOptions& opts) {
  for (double& x : nu) {
    if (x < -opts.validity_window || x > 1.0 + opts.validity_window)
      throw ConsistencyError("block_spectrum: correlation eigenvalue " + std::to_string(x) +
                             " outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
  }
  std::sort(nu.begin(), nu.end());
  return nu;
}

std::vector<double> block_spectrum(const CorrelationMatrix& c, const Block& b,
                                   const EntropyOptions& opts) {
  if (b.chain_sites() != c.size())
    throw InvalidArgument("block_spectrum: block built for " + std::to_string(b.chain_sites()) +
                          " sites, correlation matrix has " + std::to_string(c.size()));
  const auto& s = b.sites();
  Matrix sub(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) sub(i, j) = c.entries(s[i], s[j]);
  return sanitize_block_spectrum(eigvals_dense_symmetric(sub), opts);
}

double von_neumann_from_spectrum(const std::vector<double>& nu, const EntropyOptions& opts) {
  double s = 0.0;
  for (double x : nu) {
    if (x <= opts.clamp_eps || x >= 1.0 - opts.clamp_eps) continue;
    s -= x * std::log(x) + (1.0 - x) * std::log1p(-x);
  }
  return s;
}

double renyi_from_spectrum(const std::vector<double>& nu, double n, const EntropyOptions& opts) {
  if (!(n > 0.0) || n == 1.0 || !std::isfinite(n))
    throw InvalidArgument("renyi entropy: order must be > 0 and != 1, got " + std::to_string(n));
  double s = 0.0;
  for (double x : nu) {
    if (x <= opts.clamp_eps || x >= 1.0 - opts.clamp_eps) continue;
    s += std::log(std::pow(x, n) + std::pow(1.0 - x, n));
  }
  return s / (1.0 - n);
}

double entropy_of_order(const std::vector<double>& nu, double n, const EntropyOptions& opts) {
  return n == 1.0 ? von_neumann_from_spectrum(nu, opts) : renyi_from_spectrum(nu, n, opts);
}

double renyi_entropy(const CorrelationMatrix& c, const Block& b, double n,
                     const EntropyOptions& opts) {
  if (!(n > 0.0) || n == 1.0 || !std::isfinite(n))
    throw InvalidArgument("renyi_entropy: order must be > 0 and != 1, got " + std::to_string(n));
  return renyi_from_spectrum(block_spectrum(c, b, opts), n, opts);
}

double von_neumann_entropy(const CorrelationMatrix& c, const Block& b, const EntropyOptions& opts) {
  return von_neumann_from_spectrum(block_spectrum(c, b, opts), opts);
}

EntropyProfile entropy_profile(const ChainSpec& spec, double n, const EntropyOptions& opts) {
  if (!(n > 0.0) || !std::isfinite(n))
    throw InvalidArgument("entropy_profile: order must be > 0, got " + std::to_string(n));
  const GroundState gs = solve_ground_state(spec);
  const std::size_t sites = spec.sites();

  EntropyProfile profile;
  profile.spec = spec;
  profile.order = n;
  profile.samples.reserve(sites - 1);
  for (std::size_t ell = 1; ell < sites; ++ell) {
    const auto nu = block_spectrum(gs.correlations, Block::left(ell, sites), opts);
    profile.samples.push_back({ell, entropy_of_order(nu, n, opts)});
  }
  return profile;
}

double half_chain_entropy(const ChainSpec& spec, double n, const EntropyOptions& opts) {
  if (!(n > 0.0) || !std::isfinite(n))
    throw InvalidArgument("half_chain_entropy: order must be > 0, got " + std::to_string(n));
  const SingleBodySpectrum spectrum = eigh_tridiagonal(hopping_matrix(spec));
  const OccupiedModes occ = ground_state_occupation(spectrum, spec.L);
  const Block half = Block::half_chain(spec.L);
  const Matrix c = correlation_submatrix(spectrum, occ, half.sites());
  const auto nu = sanitize_block_spectrum(eigvals_dense_symmetric(c), opts);
  return entropy_of_order(nu, n, opts);
}

}  // namespace rainbow
