#include "rainbow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rainbow/chain_model.hpp"
#include "rainbow/continuum.hpp"
#include "rainbow/entanglement.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/scaling_fit.hpp"
#include "rainbow/sdrg.hpp"
#include "rainbow/spectral.hpp"
#include "rainbow/sweep.hpp"

namespace rainbow::cli {

namespace {

using nlohmann::json;

struct Globals {
  double J0 = 1.0;
  std::string format = "csv";
  std::string output;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

// Either the caller's stream or a file named by --output.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InvalidArgument("cannot open output file '" + path + "'");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

bool close_to(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)}); }

// --- spectrum ----------------------------------------------------------------

struct SpectrumArgs {
  int L = 0;
  double h = 0.0;
};

int cmd_spectrum(const SpectrumArgs& a, const Globals& g, std::ostream& out) {
  const ChainSpec spec = make_chain(a.L, a.h, g.J0);
  const SingleBodySpectrum s = eigh_tridiagonal(hopping_matrix(spec));
  const OccupiedModes occ = ground_state_occupation(s, spec.L);
  Sink sink(g.output, out);
  if (g.format == "json")
    sink.get() << io::spectrum_to_json(spec, s, occ).dump(2) << '\n';
  else
    io::write_spectrum_csv(sink.get(), spec, s, occ);
  return kOk;
}

// --- entropy -----------------------------------------------------------------

struct EntropyArgs {
  int L = 0;
  double h = 0.0;
  double n = 1.0;
  bool half_only = false;
  std::string ells;
};

int cmd_entropy(const EntropyArgs& a, const Globals& g, std::ostream& out) {
  const ChainSpec spec = make_chain(a.L, a.h, g.J0);
  EntropyProfile profile;
  profile.spec = spec;
  profile.order = a.n;
  if (a.half_only) {
    profile.samples.push_back({static_cast<std::size_t>(spec.L), half_chain_entropy(spec, a.n)});
  } else if (!a.ells.empty()) {
    const GroundState gs = solve_ground_state(spec);
    for (int ell : parse_int_list(a.ells)) {
      if (ell < 1) throw InvalidArgument("entropy: block sizes must be >= 1");
      const auto nu = block_spectrum(gs.correlations, Block::left(static_cast<std::size_t>(ell), spec.sites()));
      profile.samples.push_back({static_cast<std::size_t>(ell), entropy_of_order(nu, a.n)});
    }
  } else {
    profile = entropy_profile(spec, a.n);
  }
  Sink sink(g.output, out);
  if (g.format == "json")
    sink.get() << io::to_json(profile).dump(2) << '\n';
  else
    io::write_profile_csv(sink.get(), profile);
  return kOk;
}

// --- sdrg --------------------------------------------------------------------

struct SdrgArgs {
  int L = 0;
  double h = 0.0;
};

constexpr std::size_t kMaxDiagramSites = 400;

int cmd_sdrg(const SdrgArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const ChainSpec spec = make_chain(a.L, a.h, g.J0);
  const ValenceBondState vbs = run_sdrg(spec);
  const bool rainbow = is_rainbow(vbs, spec.L);

  std::vector<std::string> warnings;
  if (spec.h == 0.0 && spec.L > 1)
    warnings.emplace_back("h = 0: uniform couplings are outside SDRG validity (ties broken by lowest site)");
  if (!rainbow) warnings.emplace_back("valence-bond state is not a rainbow");
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  std::string diagram;
  if (vbs.n_sites <= kMaxDiagramSites) diagram = render_arc_diagram(vbs);

  Sink sink(g.output, out);
  if (g.format == "text") {
    sink.get() << diagram;
    sink.get() << "rainbow: " << (rainbow ? "yes" : "no") << '\n';
  } else if (g.format == "csv") {
    sink.get() << "# units: log_scale = log|J| in units where J0 = " << io::format_double(spec.J0) << " gives log J0\n";
    sink.get() << "a,b,type,log_scale\n";
    for (const auto& b : vbs.bonds)
      sink.get() << b.site_a << ',' << b.site_b << ',' << to_string(b.type) << ','
                 << io::format_double(b.log_energy_scale) << '\n';
  } else {
    json lines = json::array();
    std::istringstream ds(diagram);
    for (std::string line; std::getline(ds, line);) lines.push_back(line);
    json profile = json::array();
    for (const auto& s : sdrg_entropy_profile(vbs, spec).samples)
      profile.push_back({{"ell", s.ell}, {"S", s.entropy}});
    sink.get() << json{{"schema_version", io::kSchemaVersion},
                       {"chain", io::to_json(spec)},
                       {"is_rainbow", rainbow},
                       {"bonds", io::to_json(vbs)},
                       {"profile", profile},
                       {"warnings", warnings},
                       {"diagram", lines}}
                      .dump(2)
               << '\n';
  }
  return kOk;
}

// --- fit ---------------------------------------------------------------------

struct FitArgs {
  std::string model;
  std::string input;
  double K = 1.0;
  std::optional<double> n;
  std::optional<int> L;
  std::optional<double> h;
  std::optional<double> z;
  std::string method = "exact";
};

io::CsvTable load_table(const std::string& path) {
  if (path.empty() || path == "-") return io::read_csv(std::cin);
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open input file '" + path + "'");
  return io::read_csv(in);
}

// Keeps the rows matching the selection flags. A selector column that is not
// a regressor of the chosen model must be single-valued after filtering,
// otherwise the data mixes several series and the user has to pick one.
io::CsvTable filter_rows(const io::CsvTable& t, const FitArgs& a, FitModelId model) {
  const auto matches = [&](std::size_t r, const char* name, const std::optional<double>& want) {
    return !want || !t.has_column(name) || close_to(t.number(r, t.column(name)), *want);
  };
  const std::optional<double> L = a.L ? std::optional<double>(*a.L) : std::nullopt;
  io::CsvTable out{t.header, {}};
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (!matches(r, "n", a.n) || !matches(r, "h", a.h) || !matches(r, "z", a.z)) continue;
    if (model == FitModelId::BlockScaling && !matches(r, "L", L)) continue;
    if (t.has_column("method") && t.rows[r][t.column("method")] != a.method) continue;
    out.rows.push_back(t.rows[r]);
  }
  if (out.rows.empty()) throw InvalidArgument("fit: no rows left after filtering");

  std::vector<const char*> single{"n"};
  if (model == FitModelId::BlockScaling) single.insert(single.end(), {"L", "h"});
  else if (model == FitModelId::ZFamily) single.push_back("z");
  else single.push_back("h");
  for (const char* name : single) {
    if (!out.has_column(name)) continue;
    const std::size_t col = out.column(name);
    for (std::size_t r = 1; r < out.rows.size(); ++r)
      if (!close_to(out.number(r, col), out.number(0, col)))
        throw InvalidArgument(std::string("fit: column '") + name +
                              "' has several values; select one with --" + name);
  }
  return out;
}

int cmd_fit(const FitArgs& a, const Globals& g, std::ostream& out) {
  const FitModelId model = fit_model_from_string(a.model);
  const io::CsvTable table = filter_rows(load_table(a.input), a, model);
  FitOptions opts;
  opts.luttinger_K = a.K;

  FitResult result;
  json extra = json::object();
  if (model == FitModelId::BlockScaling) {
    int L = 0;
    if (a.L) L = *a.L;
    else if (table.has_column("L")) L = static_cast<int>(table.number(0, table.column("L")));
    else throw InvalidArgument("fit: BLOCK_SCALING needs --L or an L column");
    const double n = a.n.value_or(table.has_column("n") ? table.number(0, table.column("n")) : 1.0);
    const auto samples = io::block_entropies_from_csv(table);
    result = fit_block_scaling(samples, L, n, opts);
    extra["L"] = L;
    extra["n"] = n;
  } else {
    const std::size_t cl = table.column("L");
    const std::size_t cs = table.column("S");
    std::vector<SizeEntropy> samples;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const double L = table.number(r, cl);
      if (L < 1 || L != std::floor(L)) throw InvalidArgument("fit: L must be a positive integer");
      samples.push_back({static_cast<int>(L), table.number(r, cs)});
    }
    if (model == FitModelId::CftHalf) {
      result = fit_cft_halfchain(samples, opts);
    } else {
      result = fit_z_family(samples, opts);
      if (table.has_column("z")) {
        const double z = table.number(0, table.column("z"));
        extra["z"] = z;
        if (z > 0.0) extra["d_over_z"] = result.coefficient("d_z") / z;
      }
    }
  }
  json j = io::to_json(result);
  for (auto& [k, v] : extra.items()) j[k] = v;
  Sink sink(g.output, out);
  sink.get() << j.dump(2) << '\n';
  return kOk;
}

// --- predict -----------------------------------------------------------------

struct PredictArgs {
  double h = 0.0;
  double c = 1.0;
  std::optional<double> c_prime;
  std::string L_values = "32:256";
};

int cmd_predict(const PredictArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const std::vector<int> Ls = parse_int_list(a.L_values);
  if (Ls.empty()) throw InvalidArgument("predict: empty L list");
  double c_prime = 0.0;
  if (a.c_prime) {
    c_prime = *a.c_prime;
  } else {
    // c' from the uniform chain over every size spanned by the requested range.
    const auto [lo, hi] = std::minmax_element(Ls.begin(), Ls.end());
    const int first = std::max(4, *lo);
    const int last = std::max(first + 3, *hi);
    std::vector<SizeEntropy> uniform;
    for (int L = first; L <= last; ++L) uniform.push_back({L, half_chain_entropy(make_chain(L, 0.0, g.J0))});
    c_prime = fit_cft_halfchain(uniform).coefficient("c_prime");
    err << "c_prime from h=0 fit: " << io::format_double(c_prime) << '\n';
  }
  const ContinuumPrediction p = compare_weak_prediction(a.h, a.c, c_prime, Ls, g.J0);
  Sink sink(g.output, out);
  if (g.format == "json")
    sink.get() << io::to_json(p).dump(2) << '\n';
  else
    io::write_comparison_csv(sink.get(), p);
  err << "max |deviation| = " << io::format_double(p.max_abs_deviation()) << " nats\n";
  return kOk;
}

// --- sweep -------------------------------------------------------------------

struct SweepArgs {
  std::string config_path;
  std::string L_values;
  std::string h_values;
  std::string z_values;
  std::string orders;
  std::string method;
};

SweepConfig load_sweep_config(const SweepArgs& a, Globals& g, const CLI::App& sub) {
  SweepConfig c;
  if (!a.config_path.empty()) {
    std::ifstream in(a.config_path);
    if (!in) throw InvalidArgument("cannot open config file '" + a.config_path + "'");
    json j;
    try {
      in >> j;
      if (j.contains("L_values")) c.L_values = j.at("L_values").get<std::vector<int>>();
      if (j.contains("h_values")) c.h_values = j.at("h_values").get<std::vector<double>>();
      if (j.contains("z_values")) c.z_values = j.at("z_values").get<std::vector<double>>();
      if (j.contains("renyi_orders")) c.renyi_orders = j.at("renyi_orders").get<std::vector<double>>();
      if (j.contains("method")) c.method = sweep_method_from_string(j.at("method").get<std::string>());
      if (j.contains("format") && sub.get_parent()->count("--format") == 0)
        g.format = j.at("format").get<std::string>();
      if (j.contains("output") && g.output.empty()) g.output = j.at("output").get<std::string>();
      if (j.contains("workers") && sub.get_parent()->count("--workers") == 0)
        g.workers = j.at("workers").get<unsigned>();
      if (j.contains("J0")) throw InvalidArgument("sweep config: J0 is a global flag (--J0)");
    } catch (const json::exception& e) {
      throw InvalidArgument(std::string("sweep config: ") + e.what());
    }
  }
  if (sub.count("--L")) c.L_values = parse_int_list(a.L_values);
  if (sub.count("--h")) {
    c.h_values = parse_double_list(a.h_values);
    if (!sub.count("--z")) c.z_values.clear();
  }
  if (sub.count("--z")) {
    c.z_values = parse_double_list(a.z_values);
    if (!sub.count("--h")) c.h_values.clear();
  }
  if (sub.count("--n")) c.renyi_orders = parse_double_list(a.orders);
  if (sub.count("--method")) c.method = sweep_method_from_string(a.method);
  if (g.format != "csv" && g.format != "json") throw InvalidArgument("sweep: format must be csv or json");
  return c;
}

int cmd_sweep(const SweepArgs& a, Globals g, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  const SweepConfig config = load_sweep_config(a, g, sub);
  if (g.J0 != 1.0) err << "note: entropies do not depend on J0; --J0 is ignored by sweep\n";
  const SweepResult result = run_sweep(config, g.workers);

  Sink sink(g.output, out);
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& r : result.rows)
      rows.push_back({{"L", r.L}, {"h", r.h}, {"z", r.z}, {"n", r.n}, {"method", r.method}, {"S", r.S}});
    json failures = json::array();
    for (const auto& f : result.failures) failures.push_back({{"L", f.L}, {"h", f.h}, {"error", f.message}});
    sink.get() << json{{"schema_version", io::kSchemaVersion},
                       {"method", to_string(config.method)},
                       {"units", "nats"},
                       {"rows", rows},
                       {"failures", failures}}
                      .dump(2)
               << '\n';
  } else {
    sink.get() << "# units: S = half-chain entropy in nats; z = h*L\n";
    sink.get() << "L,h,z,n,method,S\n";
    for (const auto& r : result.rows)
      sink.get() << r.L << ',' << io::format_double(r.h) << ',' << io::format_double(r.z) << ','
                 << io::format_double(r.n) << ',' << r.method << ',' << io::format_double(r.S) << '\n';
  }
  if (!result.failures.empty()) {
    err << "sweep: " << result.failures.size() << " point(s) failed:\n";
    for (const auto& f : result.failures)
      err << "  L=" << f.L << " h=" << io::format_double(f.h) << ": " << f.message << '\n';
    const bool all_underflow = std::all_of(result.failures.begin(), result.failures.end(),
                                           [](const SweepFailure& f) { return f.underflow; });
    return result.rows.empty() && all_underflow ? kUnderflow : kNumerical;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow chain entanglement laboratory", "rainbow"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--J0", g.J0, "Central coupling (energy unit)")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format: csv | json (sdrg also: text)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--output,-o", g.output, "Write to this file instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Single-particle spectrum and gap (CSV: k,energy,occupied,gap)");
  spectrum->add_option("--L", spectrum_args.L, "Half the number of sites")->required();
  spectrum->add_option("--h", spectrum_args.h, "Inhomogeneity")->required();

  EntropyArgs entropy_args;
  auto* entropy = app.add_subcommand("entropy", "Left-block entropy profile (CSV: ell,S,n,L,h,z)");
  entropy->add_option("--L", entropy_args.L, "Half the number of sites")->required();
  entropy->add_option("--h", entropy_args.h, "Inhomogeneity")->required();
  entropy->add_option("--n", entropy_args.n, "Renyi order (1 = von Neumann)");
  entropy->add_flag("--half", entropy_args.half_only, "Half-chain entropy only");
  entropy->add_option("--ell", entropy_args.ells, "Block sizes, e.g. 1,2,5:9");

  SdrgArgs sdrg_args;
  auto* sdrg = app.add_subcommand("sdrg", "Strong-disorder RG valence-bond state");
  sdrg->add_option("--L", sdrg_args.L, "Half the number of sites")->required();
  sdrg->add_option("--h", sdrg_args.h, "Inhomogeneity")->required();

  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "Least-squares scaling fit of entropy data (JSON)");
  fit->add_option("--model", fit_args.model, "CFT_HALF | BLOCK_SCALING | Z_FAMILY")->required();
  fit->add_option("--input,-i", fit_args.input, "CSV file ('-' for stdin)")->required();
  fit->add_option("--K", fit_args.K, "Luttinger parameter")->check(CLI::PositiveNumber);
  fit->add_option("--n", fit_args.n, "Renyi order to select / fit");
  fit->add_option("--L", fit_args.L, "Chain half-size (BLOCK_SCALING)");
  fit->add_option("--h", fit_args.h, "Select rows with this h");
  fit->add_option("--z", fit_args.z, "Select rows with this z");
  fit->add_option("--method", fit_args.method, "Select rows with this method (default exact)");

  PredictArgs predict_args;
  auto* predict = app.add_subcommand("predict", "Weak-disorder prediction vs exact half-chain entropy");
  predict->add_option("--h", predict_args.h, "Inhomogeneity")->required();
  predict->add_option("--c", predict_args.c, "Central charge");
  predict->add_option("--c-prime", predict_args.c_prime, "Additive constant (default: from an h=0 fit)");
  predict->add_option("--L", predict_args.L_values, "Half-sizes, e.g. 32:256");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Half-chain entropies over (L, h) or (L, z) grids");
  sweep->add_option("--config", sweep_args.config_path, "JSON config file (flags override)");
  sweep->add_option("--L", sweep_args.L_values, "Half-sizes, e.g. 16:128");
  sweep->add_option("--h", sweep_args.h_values, "Inhomogeneities");
  sweep->add_option("--z", sweep_args.z_values, "Effective sizes z = hL");
  sweep->add_option("--n", sweep_args.orders, "Renyi orders");
  sweep->add_option("--method", sweep_args.method, "exact | sdrg | both");

  std::vector<std::string> argv_store = args;
  if (argv_store.empty()) argv_store.emplace_back("rainbow");
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (g.format == "text" && !sdrg->parsed())
      throw InvalidArgument("--format text is only available for sdrg");
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args, g, out);
    if (entropy->parsed()) return cmd_entropy(entropy_args, g, out);
    if (sdrg->parsed()) return cmd_sdrg(sdrg_args, g, out, err);
    if (fit->parsed()) return cmd_fit(fit_args, g, out);
    if (predict->parsed()) return cmd_predict(predict_args, g, out, err);
    if (sweep->parsed()) return cmd_sweep(sweep_args, g, *sweep, out, err);
  } catch (const UnderflowGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kUnderflow;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace rainbow::cli
