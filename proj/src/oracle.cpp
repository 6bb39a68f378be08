#include "rainbow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow::oracle {

FockBasis::FockBasis(std::size_t n_sites, std::size_t n_particles)
    : n_sites_(n_sites), n_particles_(n_particles) {
  if (n_sites == 0 || n_sites > kMaxSites)
    throw InvalidArgument("FockBasis: site count must be in 1.." + std::to_string(kMaxSites));
  if (n_particles > n_sites) throw InvalidArgument("FockBasis: more particles than sites");
  const std::uint32_t limit = 1u << n_sites;
  for (std::uint32_t m = 0; m < limit; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == n_particles) masks_.push_back(m);
}

std::size_t FockBasis::index_of(std::uint32_t mask) const {
  const auto it = std::lower_bound(masks_.begin(), masks_.end(), mask);
  if (it == masks_.end() || *it != mask) return masks_.size();
  return static_cast<std::size_t>(it - masks_.begin());
}

Matrix ManyBodyHamiltonian::to_dense() const {
  Matrix m(basis.dimension(), basis.dimension());
  for (const auto& e : entries) m(e.row, e.col) += e.value;
  return m;
}

int jordan_wigner_sign(std::uint32_t mask, std::size_t site) {
  const std::uint32_t below = mask & ((1u << site) - 1u);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

ManyBodyHamiltonian build_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (spec.sites() > kMaxSites)
    throw InvalidArgument("oracle: 2L = " + std::to_string(spec.sites()) + " exceeds the cap of " +
                          std::to_string(kMaxSites));
  const CouplingProfile profile = coupling_profile(spec);
  ManyBodyHamiltonian h{FockBasis(spec.sites(), static_cast<std::size_t>(spec.L)), {}};

  for (std::size_t col = 0; col < h.basis.dimension(); ++col) {
    const std::uint32_t m = h.basis.masks()[col];
    for (std::size_t i = 0; i + 1 < spec.sites(); ++i) {
      const std::uint32_t bi = 1u << i;
      const std::uint32_t bj = 1u << (i + 1);
      // c†_i c_{i+1} and c†_{i+1} c_i; no sites lie strictly between
      // neighbours, so the string sign is +1 for either direction.
      if (((m & bi) != 0) == ((m & bj) != 0)) continue;
      const std::uint32_t target = m ^ bi ^ bj;
      const std::uint32_t first = (m & bj) ? bj : bi;   // annihilated
      const std::uint32_t second = (m & bj) ? bi : bj;  // created
      const std::size_t s_from = static_cast<std::size_t>(std::countr_zero(first));
      const std::size_t s_to = static_cast<std::size_t>(std::countr_zero(second));
      const int sign = jordan_wigner_sign(m, s_from) * jordan_wigner_sign(m ^ first, s_to);
      const std::size_t row = h.basis.index_of(target);
      h.entries.push_back({row, col, -0.5 * profile.bonds[i] * sign});
    }
  }
  return h;
}

ManyBodyState ground_state(const ManyBodyHamiltonian& h) {
  const auto eig = eigh_dense_symmetric(h.to_dense());
  if (eig.values.size() > 1 && eig.values[1] - eig.values[0] < 1e-10)
    throw DegeneracyError("oracle ground_state: lowest levels within 1e-10 (" +
                          std::to_string(eig.values[1] - eig.values[0]) + ")");
  ManyBodyState s{h.basis, eig.vectors.column(0), eig.values[0]};
  return s;
}

ManyBodyState rainbow_state(int L) {
  if (L < 1 || 2 * static_cast<std::size_t>(L) > kMaxSites)
    throw InvalidArgument("rainbow_state: 2L must be in 2.." + std::to_string(kMaxSites));
  const std::size_t n_sites = 2 * static_cast<std::size_t>(L);

  // Sparse map mask -> amplitude, built by applying pair operators to |0>.
  std::vector<std::pair<std::uint32_t, double>> state{{0u, 1.0}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= L; ++k) {
    const std::size_t left = static_cast<std::size_t>(L - k);
    const std::size_t right = static_cast<std::size_t>(L - 1 + k);
    const double pair_sign = (k % 2 == 1) ? 1.0 : -1.0;
    std::vector<std::pair<std::uint32_t, double>> next;
    for (const auto& [mask, amp] : state) {
      for (const auto& [site, coeff] : {std::pair{left, 1.0}, std::pair{right, pair_sign}}) {
        const std::uint32_t bit = 1u << site;
        if (mask & bit) continue;
        next.emplace_back(mask | bit, amp * coeff * inv_sqrt2 * jordan_wigner_sign(mask, site));
      }
    }
    state = std::move(next);
  }

  FockBasis basis(n_sites, static_cast<std::size_t>(L));
  std::vector<double> amplitudes(basis.dimension(), 0.0);
  for (const auto& [mask, amp] : state) amplitudes[basis.index_of(mask)] += amp;
  return ManyBodyState{std::move(basis), std::move(amplitudes), 0.0};
}

double overlap(const ManyBodyState& a, const ManyBodyState& b) {
  if (a.basis.masks() != b.basis.masks()) throw InvalidArgument("overlap: bases differ");
  return dot(a.amplitudes, b.amplitudes);
}

std::vector<double> reduced_density_spectrum(const ManyBodyState& state, std::size_t ell) {
  const std::size_t n = state.basis.n_sites();
  if (ell == 0 || ell > n)
    throw InvalidArgument("reduced_entropy: only left blocks {0..ell-1} with 1 <= ell <= 2L are supported");
  // With the string running left to right, amplitudes of a left block factor
  // as ψ(a, b) with no extra sign: a = low ell bits, b = the rest.
  const std::size_t dim_a = std::size_t{1} << ell;
  const std::size_t dim_b = std::size_t{1} << (n - ell);
  Matrix psi(dim_a, dim_b);
  for (std::size_t k = 0; k < state.basis.dimension(); ++k) {
    const std::uint32_t m = state.basis.masks()[k];
    psi(m & (dim_a - 1), m >> ell) = state.amplitudes[k];
  }
  Matrix rho(dim_a, dim_a);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = i; j < dim_a; ++j) {
      const double v = dot(psi.row(i), psi.row(j));
      rho(i, j) = v;
      rho(j, i) = v;
    }
  return eigvals_dense_symmetric(rho);
}

double reduced_entropy(const ManyBodyState& state, std::size_t ell, double n) {
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("reduced_entropy: order must be > 0");
  const auto lambdas = reduced_density_spectrum(state, ell);
  if (n == 1.0) {
    double s = 0.0;
    for (double l : lambdas)
      if (l > 1e-300) s -= l * std::log(l);
    return s;
  }
  double tr = 0.0;
  for (double l : lambdas)
    if (l > 0.0) tr += std::pow(l, n);
  return std::log(tr) / (1.0 - n);
}

}  // namespace rainbow::oracle
