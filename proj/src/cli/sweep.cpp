#include "rainbow/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <thread>

#include "rainbow/chain_model.hpp"
#include "rainbow/entanglement.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/sdrg.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow {

const char* to_string(SweepMethod m) {
  switch (m) {
    case SweepMethod::Exact:
      return "exact";
    case SweepMethod::Sdrg:
      return "sdrg";
    case SweepMethod::Both:
      return "both";
  }
  return "?";
}

SweepMethod sweep_method_from_string(const std::string& s) {
  if (s == "exact") return SweepMethod::Exact;
  if (s == "sdrg") return SweepMethod::Sdrg;
  if (s == "both") return SweepMethod::Both;
  throw InvalidArgument("unknown method '" + s + "' (expected exact, sdrg or both)");
}

namespace {

struct Point {
  int L;
  double h;
  double z;
};

std::vector<Point> expand(const SweepConfig& c) {
  std::vector<Point> pts;
  for (int L : c.L_values) {
    if (!c.h_values.empty())
      for (double h : c.h_values) pts.push_back({L, h, h * L});
    else
      for (double z : c.z_values) pts.push_back({L, z / L, z});
  }
  return pts;
}

std::vector<SweepRow> evaluate(const Point& p, const SweepConfig& c) {
  const ChainSpec spec = make_chain(p.L, p.h);
  std::vector<SweepRow> rows;
  std::vector<double> nu;
  if (c.method != SweepMethod::Sdrg) {
    const SingleBodySpectrum spectrum = eigh_tridiagonal(hopping_matrix(spec));
    const OccupiedModes occ = ground_state_occupation(spectrum, spec.L);
    const Block half = Block::half_chain(spec.L);
    nu = sanitize_block_spectrum(
        eigvals_dense_symmetric(correlation_submatrix(spectrum, occ, half.sites())));
  }
  double s_sdrg = 0.0;
  if (c.method != SweepMethod::Exact)
    s_sdrg = bond_count_entropy(run_sdrg(spec), Block::half_chain(spec.L));

  for (double n : c.renyi_orders) {
    if (c.method != SweepMethod::Sdrg) rows.push_back({p.L, p.h, p.z, n, "exact", entropy_of_order(nu, n)});
    if (c.method != SweepMethod::Exact) rows.push_back({p.L, p.h, p.z, n, "sdrg", s_sdrg});
  }
  return rows;
}

}  // namespace

void SweepConfig::validate() const {
  if (L_values.empty()) throw InvalidArgument("sweep: empty L list");
  if (h_values.empty() == z_values.empty())
    throw InvalidArgument("sweep: give exactly one of h values or z values");
  if (renyi_orders.empty()) throw InvalidArgument("sweep: empty Renyi order list");
  for (int L : L_values)
    if (L < 1) throw InvalidArgument("sweep: L values must be >= 1");
  for (double n : renyi_orders)
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("sweep: Renyi orders must be > 0");
  for (double v : h_values)
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("sweep: h values must be >= 0");
  for (double v : z_values)
    if (!(v >= 0.0) || !std::isfinite(v)) throw InvalidArgument("sweep: z values must be >= 0");
}

SweepResult run_sweep(const SweepConfig& config, unsigned workers) {
  config.validate();
  const std::vector<Point> points = expand(config);
  std::vector<std::optional<std::vector<SweepRow>>> results(points.size());
  std::vector<std::string> errors(points.size());
  std::vector<char> underflow(points.size(), 0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < points.size(); i = next.fetch_add(1)) {
      try {
        results[i] = evaluate(points[i], config);
      } catch (const UnderflowGuardError& e) {
        errors[i] = e.what();
        underflow[i] = 1;
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(points.size())));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
  }

  SweepResult out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (results[i])
      out.rows.insert(out.rows.end(), results[i]->begin(), results[i]->end());
    else
      out.failures.push_back({points[i].L, points[i].h, errors[i], underflow[i] != 0});
  }
  return out;
}

namespace {

template <typename T>
T parse_scalar(const std::string& token) {
  T v{};
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || token.empty())
    throw InvalidArgument("cannot parse '" + token + "' as a number");
  return v;
}

std::vector<std::string> tokens(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
              tok.end());
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : tokens(text)) {
    const auto c1 = tok.find(':');
    if (c1 == std::string::npos) {
      out.push_back(parse_scalar<int>(tok));
      continue;
    }
    const auto c2 = tok.find(':', c1 + 1);
    const int lo = parse_scalar<int>(tok.substr(0, c1));
    const int hi = parse_scalar<int>(tok.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1));
    const int step = c2 == std::string::npos ? 1 : parse_scalar<int>(tok.substr(c2 + 1));
    if (step <= 0 || hi < lo) throw InvalidArgument("bad range '" + tok + "'");
    for (int v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : tokens(text)) out.push_back(parse_scalar<double>(tok));
  return out;
}

}  // namespace rainbow
