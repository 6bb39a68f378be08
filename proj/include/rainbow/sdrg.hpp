#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rainbow/chain_model.hpp"
#include "rainbow/entanglement.hpp"

namespace rainbow {

/// An effective coupling between two live sites, kept as log|J| plus a sign
/// so that deep cascades never underflow.
struct RenormCoupling {
  double log_magnitude = 0.0;
  int sign = 1;
  std::size_t left_site = 0;
  std::size_t right_site = 0;
};

/// Bonding: (c†_a + c†_b)/√2, the two-site ground state for a positive
/// coupling. Antibonding: (c†_a - c†_b)/√2, for a negative one.
enum class BondType { Bonding, Antibonding };

const char* to_string(BondType t);

struct ValenceBond {
  std::size_t site_a = 0;  // site_a < site_b
  std::size_t site_b = 0;
  BondType type = BondType::Bonding;
  double log_energy_scale = 0.0;  // log|J| of the decimated coupling
};

struct ValenceBondState {
  std::size_t n_sites = 0;
  std::vector<ValenceBond> bonds;  // in decimation order
};

/// Strong-disorder RG on an open chain given per-bond log|J| and sign.
/// Decimates the strongest coupling (lowest left site on ties), replacing
/// (J_L, J_max, J_R) by J~ = -J_L J_R / J_max. A missing neighbour just drops
/// the coupling to the frozen site.
ValenceBondState run_sdrg_log(const std::vector<double>& log_magnitudes,
                              const std::vector<int>& signs);

/// Throws InvalidArgument on an empty profile or non-positive bond.
ValenceBondState run_sdrg(const CouplingProfile& profile);

/// Uses log-domain couplings directly, so any (L, h) is accepted.
ValenceBondState run_sdrg(const ChainSpec& spec);

/// n_B·log 2 with n_B = bonds with exactly one end in B.
double bond_count_entropy(const ValenceBondState& vbs, const Block& b);

/// True iff the bonds are exactly {(L-k, L-1+k) : k = 1..L}.
bool is_rainbow(const ValenceBondState& vbs, int L);

/// Left-block bond-counting entropies, ell = 1..n_sites-1 (order recorded as 1).
EntropyProfile sdrg_entropy_profile(const ValenceBondState& vbs, const ChainSpec& spec);

/// Sites on a line with bonds as nested arcs; the apex letter is B (bonding)
/// or A (antibonding).
std::string render_arc_diagram(const ValenceBondState& vbs);

}  // namespace rainbow
