#pragma once

// Brute-force many-body reference for small chains (2L <= 12). Nothing here
// uses the single-particle machinery, so it can certify it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rainbow/chain_model.hpp"
#include "rainbow/linalg.hpp"

namespace rainbow::oracle {

constexpr std::size_t kMaxSites = 12;

/// All occupation bitmasks of `n_sites` modes with `n_particles` set bits,
/// ascending. Bit i is site i.
class FockBasis {
 public:
  FockBasis(std::size_t n_sites, std::size_t n_particles);

  std::size_t n_sites() const { return n_sites_; }
  std::size_t n_particles() const { return n_particles_; }
  std::size_t dimension() const { return masks_.size(); }
  const std::vector<std::uint32_t>& masks() const { return masks_; }

  /// Position of `mask`, or dimension() if absent.
  std::size_t index_of(std::uint32_t mask) const;

 private:
  std::size_t n_sites_;
  std::size_t n_particles_;
  std::vector<std::uint32_t> masks_;
};

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  double value;
};

struct ManyBodyHamiltonian {
  FockBasis basis;
  std::vector<SparseEntry> entries;  // both (r,c) and (c,r) stored

  Matrix to_dense() const;
};

/// -(J_i/2)(c†_i c_{i+1} + h.c.) over all bonds, in the N = L sector.
/// Throws InvalidArgument when 2L > 12.
ManyBodyHamiltonian build_hamiltonian(const ChainSpec& spec);

struct ManyBodyState {
  FockBasis basis;
  std::vector<double> amplitudes;  // unit norm
  double energy = 0.0;
};

/// Lowest eigenvector by dense diagonalization. Throws DegeneracyError if the
/// two lowest levels are within 1e-10.
ManyBodyState ground_state(const ManyBodyHamiltonian& h);

/// Sign picked up by c†_site or c_site acting on `mask` (occupied sites
/// strictly left of `site`).
int jordan_wigner_sign(std::uint32_t mask, std::size_t site);

/// |R(L)> = (b_L)† ... (b_2^-)† (b_1^+)† |0>, with b_k^± pairing sites
/// (L-k, L-1+k) and the sign alternating outward from bonding at the centre.
ManyBodyState rainbow_state(int L);

double overlap(const ManyBodyState& a, const ManyBodyState& b);

/// Eigenvalues of the reduced density matrix of the left block {0..ell-1}.
std::vector<double> reduced_density_spectrum(const ManyBodyState& state, std::size_t ell);

/// von Neumann entropy for n == 1, Rényi otherwise; left blocks only.
double reduced_entropy(const ManyBodyState& state, std::size_t ell, double n);

}  // namespace rainbow::oracle
