#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/chain_model.hpp"
#include "rainbow/linalg.hpp"

namespace rainbow {

/// Eigen-decomposition of the single-particle hopping matrix.
/// energies ascending; column k of `modes` is the eigenvector of energies[k].
struct SingleBodySpectrum {
  std::vector<double> energies;
  Matrix modes;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k pairs with values[k]
};

/// Implicit-shift QL with eigenvector accumulation. Each eigenvector is
/// oriented so its largest-magnitude component is positive (lowest index
/// wins ties). Throws ConvergenceError after 50 sweeps on one eigenvalue.
SingleBodySpectrum eigh_tridiagonal(const TridiagonalMatrix& t);

/// Eigenvalues only (ascending); O(n^2).
std::vector<double> eigvals_tridiagonal(const TridiagonalMatrix& t);

/// Householder tridiagonalization followed by the QL kernel.
/// Throws InvalidArgument if `m` is not square or not symmetric to 1e-10
/// relative to its largest entry.
SymmetricEigen eigh_dense_symmetric(const Matrix& m);

std::vector<double> eigvals_dense_symmetric(const Matrix& m);

/// Householder reduction of a symmetric matrix; `q` receives the orthogonal
/// transform with m = q·T·qᵀ when requested.
TridiagonalMatrix householder_tridiagonalize(const Matrix& m, Matrix* q);

struct OccupiedModes {
  std::vector<std::size_t> indices;  // Ω, ascending
  double highest_occupied = 0.0;
  double lowest_empty = 0.0;
};

/// Resolution below which the Fermi gap is considered numerically degenerate:
/// 64·eps·max(|ε_L|, |ε_{L+1}|). The QL solver resolves each eigenvalue to a
/// few ulps of itself, so even an exponentially small gap between levels of
/// opposite sign is meaningful.
double default_fermi_tolerance(double highest_occupied, double lowest_empty);

/// Ω = the L lowest modes. Throws DegeneracyError if ε_{L+1} - ε_L <= tolerance
/// (negative tolerance selects default_fermi_tolerance).
OccupiedModes ground_state_occupation(const SingleBodySpectrum& spectrum, int L,
                                      double tolerance = -1.0);

struct CorrelationMatrix {
  Matrix entries;  // C_ij = <c†_i c_j>

  std::size_t size() const { return entries.rows(); }
};

CorrelationMatrix correlation_matrix(const SingleBodySpectrum& spectrum,
                                     const OccupiedModes& occupied);

/// Correlations restricted to `sites` only (|sites|² work instead of (2L)²).
Matrix correlation_submatrix(const SingleBodySpectrum& spectrum, const OccupiedModes& occupied,
                             const std::vector<std::size_t>& sites);

/// ε_{L+1} - ε_L for a 2L-site spectrum.
double single_particle_gap(const SingleBodySpectrum& spectrum);
double single_particle_gap(const std::vector<double>& ascending_energies);

/// Full pipeline for one chain: hopping matrix, spectrum, Ω, C.
struct GroundState {
  ChainSpec spec;
  SingleBodySpectrum spectrum;
  OccupiedModes occupied;
  CorrelationMatrix correlations;
};

GroundState solve_ground_state(const ChainSpec& spec);

}  // namespace rainbow
