#include "rainbow/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow::io {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";
  char buf[64];
  for (int precision = 1; precision <= 12; ++precision) {
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, precision);
    double back = 0.0;
    std::from_chars(buf, res.ptr, back);
    if (back == value || precision == 12) return std::string(buf, res.ptr);
  }
  return {};
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw InvalidArgument("CSV: missing column '" + std::string(name) + "'");
}

bool CsvTable::has_column(std::string_view name) const {
  for (const auto& h : header)
    if (h == name) return true;
  return false;
}

double CsvTable::number(std::size_t row, std::size_t col) const {
  const std::string& cell = rows.at(row).at(col);
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw InvalidArgument("CSV: malformed number '" + cell + "' in row " + std::to_string(row + 1) +
                          ", column '" + header.at(col) + "'");
  return v;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    auto cells = split(stripped);
    if (!have_header) {
      t.header = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != t.header.size())
      throw InvalidArgument("CSV: row " + std::to_string(t.rows.size() + 1) + " has " +
                            std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(t.header.size()));
    t.rows.push_back(std::move(cells));
  }
  if (!have_header) throw InvalidArgument("CSV: no header row");
  return t;
}

void write_spectrum_csv(std::ostream& out, const ChainSpec& spec, const SingleBodySpectrum& s,
                        const OccupiedModes& occ) {
  out << "# units: energy and gap in the same units as J0 (J0=" << format_double(spec.J0) << ")\n";
  out << "k,energy,occupied,gap\n";
  const double gap = single_particle_gap(s);
  std::vector<bool> in_omega(s.energies.size(), false);
  for (auto k : occ.indices) in_omega[k] = true;
  for (std::size_t k = 0; k < s.energies.size(); ++k)
    out << k << ',' << format_double(s.energies[k]) << ',' << (in_omega[k] ? 1 : 0) << ','
        << format_double(gap) << '\n';
}

void write_profile_csv(std::ostream& out, const EntropyProfile& p, bool with_header) {
  if (with_header) {
    out << "# units: S in nats; ell = block size in sites; h dimensionless; z = h*L\n";
    out << "ell,S,n,L,h,z\n";
  }
  const std::string n = format_double(p.order);
  const std::string h = format_double(p.spec.h);
  const std::string z = format_double(effective_size(p.spec));
  for (const auto& smp : p.samples)
    out << smp.ell << ',' << format_double(smp.entropy) << ',' << n << ',' << p.spec.L << ',' << h
        << ',' << z << '\n';
}

void write_comparison_csv(std::ostream& out, const ContinuumPrediction& p) {
  out << "# units: entropies and deviation in nats; deviation = S_exact - S_predicted\n";
  out << "L,h,S_exact,S_predicted,deviation\n";
  for (const auto& r : p.rows)
    out << r.L << ',' << format_double(r.h) << ',' << format_double(r.S_exact) << ','
        << format_double(r.S_predicted) << ',' << format_double(r.deviation) << '\n';
}

nlohmann::json to_json(const ChainSpec& spec) {
  return {{"L", spec.L}, {"h", spec.h}, {"J0", spec.J0}};
}

ChainSpec chain_spec_from_json(const nlohmann::json& j) {
  try {
    ChainSpec spec;
    spec.L = j.at("L").get<int>();
    spec.h = j.at("h").get<double>();
    spec.J0 = j.contains("J0") ? j.at("J0").get<double>() : 1.0;
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("ChainSpec JSON: ") + e.what());
  }
}

nlohmann::json to_json(const EntropyProfile& p) {
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : p.samples) samples.push_back({{"ell", s.ell}, {"S", s.entropy}});
  return {{"schema_version", kSchemaVersion},
          {"metadata",
           {{"chain", to_json(p.spec)}, {"n", p.order}, {"z", effective_size(p.spec)}, {"units", "nats"}}},
          {"samples", samples}};
}

nlohmann::json to_json(const ValenceBondState& vbs) {
  nlohmann::json bonds = nlohmann::json::array();
  for (const auto& b : vbs.bonds)
    bonds.push_back({{"a", b.site_a}, {"b", b.site_b}, {"type", to_string(b.type)},
                     {"log_scale", b.log_energy_scale}});
  return bonds;
}

nlohmann::json to_json(const FitResult& fit) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, v] : fit.coefficients) coeffs[k] = v;
  nlohmann::json j = {{"schema_version", kSchemaVersion},
                      {"model", to_string(fit.model)},
                      {"coefficients", coeffs},
                      {"residual_rms", fit.residual_rms},
                      {"condition_estimate", fit.condition_estimate},
                      {"n_samples", fit.n_samples}};
  if (fit.ill_conditioned) j["warning"] = "condition estimate exceeds 1e8";
  return j;
}

nlohmann::json to_json(const ContinuumPrediction& p) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : p.rows)
    rows.push_back({{"L", r.L}, {"h", r.h}, {"S_exact", r.S_exact}, {"S_predicted", r.S_predicted},
                    {"deviation", r.deviation}});
  return {{"schema_version", kSchemaVersion},
          {"h", p.h},
          {"c", p.c},
          {"c_prime", p.c_prime},
          {"effective_temperature", p.effective_temperature},
          {"curvature", {{"bulk", p.curvature.bulk}, {"singular_at_origin", p.curvature.singular_at_origin}}},
          {"max_abs_deviation", p.max_abs_deviation()},
          {"rows", rows}};
}

nlohmann::json spectrum_to_json(const ChainSpec& spec, const SingleBodySpectrum& s,
                                const OccupiedModes& occ) {
  std::vector<int> occupied(s.energies.size(), 0);
  for (auto k : occ.indices) occupied[k] = 1;
  return {{"schema_version", kSchemaVersion},
          {"chain", to_json(spec)},
          {"energies", s.energies},
          {"occupied", occupied},
          {"gap", single_particle_gap(s)}};
}

std::vector<BlockEntropy> block_entropies_from_csv(const CsvTable& table) {
  const std::size_t ell = table.column("ell");
  const std::size_t S = table.column("S");
  std::vector<BlockEntropy> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double e = table.number(r, ell);
    if (e < 1 || e != std::floor(e)) throw InvalidArgument("CSV: ell must be a positive integer");
    out.push_back({static_cast<std::size_t>(e), table.number(r, S)});
  }
  return out;
}

}  // namespace rainbow::io
