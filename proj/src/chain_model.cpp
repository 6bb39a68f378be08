#include "rainbow/chain_model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {
// exp(-x) leaves the normal double range a little past x = 708.
constexpr double kExpLimit = 700.0;
}  // namespace

void ChainSpec::validate() const {
  if (L < 1) throw InvalidArgument("ChainSpec: L must be >= 1, got " + std::to_string(L));
  if (!std::isfinite(h) || h < 0.0)
    throw InvalidArgument("ChainSpec: h must be finite and >= 0, got " + std::to_string(h));
  if (!std::isfinite(J0) || J0 <= 0.0)
    throw InvalidArgument("ChainSpec: J0 must be finite and > 0, got " + std::to_string(J0));
}

ChainSpec make_chain(int L, double h, double J0) {
  ChainSpec spec{L, h, J0};
  spec.validate();
  return spec;
}

double site_label(std::size_t i, int L) {
  if (L < 1 || i >= 2 * static_cast<std::size_t>(L))
    throw InvalidArgument("site_label: index " + std::to_string(i) + " outside 0.." +
                          std::to_string(2 * L - 1));
  return static_cast<double>(i) - static_cast<double>(L) + 0.5;
}

double effective_size(const ChainSpec& spec) { return spec.h * spec.L; }

double bond_distance(std::size_t bond, int L) {
  const long offset = std::labs(static_cast<long>(bond) - static_cast<long>(L - 1));
  return offset == 0 ? 0.0 : static_cast<double>(offset) - 0.5;
}

CouplingProfile coupling_profile(const ChainSpec& spec) {
  spec.validate();
  const std::size_t n_bonds = spec.sites() - 1;
  CouplingProfile profile;
  profile.bonds.resize(n_bonds, spec.J0);
  if (spec.h == 0.0) return profile;

  if (spec.h * (spec.L - 1.5) > kExpLimit)
    throw UnderflowGuardError("coupling_profile: h*(L-3/2) = " +
                              std::to_string(spec.h * (spec.L - 1.5)) +
                              " exceeds 700; outer couplings underflow (use the log-domain SDRG)");
  for (std::size_t i = 0; i < n_bonds; ++i)
    profile.bonds[i] = spec.J0 * std::exp(-spec.h * bond_distance(i, spec.L));
  return profile;
}

std::vector<double> log_coupling_profile(const ChainSpec& spec) {
  spec.validate();
  const std::size_t n_bonds = spec.sites() - 1;
  std::vector<double> logs(n_bonds);
  const double log_j0 = std::log(spec.J0);
  for (std::size_t i = 0; i < n_bonds; ++i) logs[i] = log_j0 - spec.h * bond_distance(i, spec.L);
  return logs;
}

TridiagonalMatrix hopping_matrix(const ChainSpec& spec) {
  const CouplingProfile profile = coupling_profile(spec);
  TridiagonalMatrix t;
  t.diagonal.assign(spec.sites(), 0.0);
  t.offdiagonal.resize(profile.bonds.size());
  for (std::size_t i = 0; i < profile.bonds.size(); ++i) t.offdiagonal[i] = -0.5 * profile.bonds[i];
  return t;
}

}  // namespace rainbow
