#pragma once

#include <cstddef>
#include <vector>

namespace rainbow {

/// Parameters of the rainbow chain: 2L sites, couplings J0·exp(-h·d) decaying
/// away from the central bond.
struct ChainSpec {
  int L = 1;
  double h = 0.0;
  double J0 = 1.0;

  /// Throws InvalidArgument unless L >= 1, h >= 0 (finite), J0 > 0 (finite).
  void validate() const;

  std::size_t sites() const { return 2 * static_cast<std::size_t>(L); }

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;
};

/// Constructs and validates.
ChainSpec make_chain(int L, double h, double J0 = 1.0);

/// Half-integer label of array index i: i - L + 1/2.
double site_label(std::size_t i, int L);

/// z = h·L.
double effective_size(const ChainSpec& spec);

/// Decay distance of bond i (joining sites i and i+1): 0 for the central bond,
/// otherwise the half-integer m of the term J_m.
double bond_distance(std::size_t bond, int L);

struct CouplingProfile {
  std::vector<double> bonds;  // 2L-1 entries, bonds[i] joins sites i and i+1
};

/// Throws UnderflowGuardError when h·(L - 3/2) > 700.
CouplingProfile coupling_profile(const ChainSpec& spec);

/// log of each bond strength; never underflows, usable at any z.
std::vector<double> log_coupling_profile(const ChainSpec& spec);

struct TridiagonalMatrix {
  std::vector<double> diagonal;
  std::vector<double> offdiagonal;  // size() - 1 entries

  std::size_t size() const { return diagonal.size(); }
};

/// Single-particle hopping matrix: zero diagonal, offdiagonal(i) = -bond(i)/2.
TridiagonalMatrix hopping_matrix(const ChainSpec& spec);

}  // namespace rainbow
