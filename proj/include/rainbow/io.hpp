#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "rainbow/chain_model.hpp"
#include "rainbow/continuum.hpp"
#include "rainbow/entanglement.hpp"
#include "rainbow/scaling_fit.hpp"
#include "rainbow/sdrg.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow::io {

constexpr int kSchemaVersion = 1;

/// Shortest decimal string that round-trips, capped at 12 significant digits.
std::string format_double(double value);

/// Parsed CSV: header row plus string cells. Lines starting with '#' and blank
/// lines are skipped.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position; throws InvalidArgument if missing.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
  /// Cell as double; throws InvalidArgument on malformed numbers.
  double number(std::size_t row, std::size_t col) const;
};

/// Throws InvalidArgument on ragged rows or an empty input.
CsvTable read_csv(std::istream& in);

void write_spectrum_csv(std::ostream& out, const ChainSpec& spec, const SingleBodySpectrum& s,
                        const OccupiedModes& occ);
void write_profile_csv(std::ostream& out, const EntropyProfile& profile, bool with_header = true);
void write_comparison_csv(std::ostream& out, const ContinuumPrediction& p);

nlohmann::json to_json(const ChainSpec& spec);
ChainSpec chain_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EntropyProfile& profile);
nlohmann::json to_json(const ValenceBondState& vbs);
nlohmann::json to_json(const FitResult& fit);
nlohmann::json to_json(const ContinuumPrediction& p);
nlohmann::json spectrum_to_json(const ChainSpec& spec, const SingleBodySpectrum& s,
                                const OccupiedModes& occ);

/// Profile rows read back from write_profile_csv output (or any CSV with
/// columns ell and S).
std::vector<BlockEntropy> block_entropies_from_csv(const CsvTable& table);

}  // namespace rainbow::io
