// Acceptance suite: one PASS/FAIL line per criterion.
//   rainbow_acceptance            run all criteria
//   rainbow_acceptance 2 5        run a subset
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/continuum.hpp"
#include "rainbow/entanglement.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/scaling_fit.hpp"
#include "rainbow/sdrg.hpp"
#include "rainbow/spectral.hpp"

using namespace rainbow;

namespace {

const double kLog2 = std::numbers::ln2;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;  // 0 = no limit
  std::function<void(Verdict&)> body;
};

std::vector<SizeEntropy> half_chain_series(int lo, int hi, const std::function<double(int)>& h_of_L) {
  std::vector<SizeEntropy> out;
  for (int L = lo; L <= hi; ++L) out.push_back({L, half_chain_entropy(make_chain(L, h_of_L(L)))});
  return out;
}

void oracle_equivalence(Verdict& v) {
  double worst = 0.0;
  int comparisons = 0;
  for (int L = 1; L <= 4; ++L)
    for (double h : {0.0, 0.5, 2.0}) {
      const ChainSpec spec = make_chain(L, h);
      const GroundState gs = solve_ground_state(spec);
      const auto psi = oracle::ground_state(oracle::build_hamiltonian(spec));
      for (std::size_t ell = 1; ell < spec.sites(); ++ell) {
        const auto nu = block_spectrum(gs.correlations, Block::left(ell, spec.sites()));
        for (double n : {1.0, 2.0}) {
          worst = std::max(worst, std::abs(entropy_of_order(nu, n) - oracle::reduced_entropy(psi, ell, n)));
          ++comparisons;
        }
      }
    }
  v.detail << comparisons << " comparisons, max |dS| = " << worst;
  v.require(worst <= 1e-8, "max |dS| <= 1e-8");
}

void central_charge(Verdict& v) {
  const auto data = half_chain_series(16, 256, [](int) { return 0.0; });
  const FitResult fit = fit_cft_halfchain(data);
  const double c = fit.coefficient("c");
  v.detail << "c = " << c << ", c' = " << fit.coefficient("c_prime") << ", f = " << fit.coefficient("f");
  v.require(c >= 0.95 && c <= 1.05, "c in [0.95, 1.05]");
}

void volume_law(Verdict& v) {
  const ChainSpec spec = make_chain(8, 4.0);
  const double s = half_chain_entropy(spec);
  const double ratio = s / (spec.L * kLog2);
  const auto exact = entropy_profile(spec);
  const auto counted = sdrg_entropy_profile(run_sdrg(spec), spec);
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.samples.size(); ++i)
    worst = std::max(worst, std::abs(exact.samples[i].entropy - counted.samples[i].entropy));
  v.detail << "S_half/(L log 2) = " << ratio << ", max |S_exact - S_sdrg| = " << worst << " nats";
  v.require(ratio >= 0.98 && ratio <= 1.0, "S_half/(L log 2) in [0.98, 1]");
  v.require(worst <= 0.05, "staircase within 0.05 nats");
}

void rainbow_structure(Verdict& v) {
  int runs = 0;
  for (int L = 1; L <= 64; ++L)
    for (double h : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 10.0}) {
      const auto vbs = run_sdrg(coupling_profile(make_chain(L, h)));
      bool ok = is_rainbow(vbs, L) && vbs.bonds.size() == static_cast<std::size_t>(L);
      for (std::size_t k = 0; ok && k < vbs.bonds.size(); ++k) {
        const BondType want = k % 2 == 0 ? BondType::Bonding : BondType::Antibonding;
        ok = vbs.bonds[k].type == want && vbs.bonds[k].site_a == static_cast<std::size_t>(L - 1) - k &&
             vbs.bonds[k].site_b == static_cast<std::size_t>(L) + k;
      }
      ++runs;
      if (!ok) {
        v.require(false, "L=" + std::to_string(L) + ", h=" + std::to_string(h));
        return;
      }
    }
  v.detail << runs << " profiles (L = 1..64) concentric, alternating from bonding at the centre";
}

void z_family(Verdict& v) {
  const auto fit_at = [](double z) {
    return fit_z_family(half_chain_series(16, 128, [z](int L) { return z / L; }));
  };
  const FitResult f0 = fit_at(0.0), f5 = fit_at(5.0), f9 = fit_at(9.0);
  const double c0 = f0.coefficient("c_z"), c5 = f5.coefficient("c_z"), c9 = f9.coefficient("c_z");
  const double r5 = f5.coefficient("d_z") / 5.0, r9 = f9.coefficient("d_z") / 9.0;
  v.detail << "c(0) = " << c0 << ", c(5) = " << c5 << ", c(9) = " << c9 << ", d(5)/5 = " << r5
           << ", d(9)/9 = " << r9;
  const auto within = [](double x) { return std::abs(x - 0.318) <= 0.15 * 0.318; };
  v.require(within(r5), "d(5)/5 = 0.318 +- 15%");
  v.require(within(r9), "d(9)/9 = 0.318 +- 15%");
  v.require(c9 < c5 && c5 < c0, "c(9) < c(5) < c(0)");
  v.require(std::abs(c0 - 1.0) <= 0.05, "c(0) ~ 1");
}

void weak_disorder(Verdict& v) {
  const FitResult uniform = fit_cft_halfchain(half_chain_series(16, 256, [](int) { return 0.0; }));
  const double c_prime = uniform.coefficient("c_prime");
  std::vector<int> Ls;
  for (int L = 32; L <= 256; ++L) Ls.push_back(L);
  v.detail << "c' = " << c_prime;
  for (double h : {0.01, 0.05}) {
    const ContinuumPrediction p = compare_weak_prediction(h, 1.0, c_prime, Ls);
    const double dev = p.max_abs_deviation();
    v.detail << ", max |dev|(h=" << h << ") = " << dev;
    v.require(dev <= 0.1, "deviation <= 0.1 nats at h=" + std::to_string(h));
  }
}

void gap_closure(Verdict& v) {
  for (double h : {0.5, 1.0, 2.0}) {
    double prev = INFINITY;
    v.detail << "h=" << h << ":";
    for (int L : {4, 8, 16, 32}) {
      const double gap = single_particle_gap(eigvals_tridiagonal(hopping_matrix(make_chain(L, h))));
      v.detail << ' ' << gap;
      v.require(gap < prev, "gap decreasing at h=" + std::to_string(h) + ", L=" + std::to_string(L));
      prev = gap;
    }
    v.detail << "; ";
  }
}

void property_suites(Verdict& v) {
  constexpr int kInstances = 120;
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto random_chain = [&] {
    const int L = 1 + static_cast<int>(unit(rng) * 24);
    const double h = unit(rng) < 0.3 ? 0.0 : 2.0 * unit(rng);
    return make_chain(L, h, std::exp(4.0 * unit(rng) - 2.0));
  };
  const auto random_block = [&](std::size_t n) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < n; ++i)
      if (unit(rng) < 0.5) sites.push_back(i);
    if (sites.empty() || sites.size() == n) sites = {static_cast<std::size_t>(unit(rng) * n)};
    return Block::of(sites, n);
  };
  int failures[6] = {};

  for (int t = 0; t < kInstances; ++t) {
    const ChainSpec spec = random_chain();
    const auto s = eigh_tridiagonal(hopping_matrix(spec));
    const std::size_t n = spec.sites();
    for (std::size_t k = 0; k < n; ++k)
      if (std::abs(s.energies[k] + s.energies[n - 1 - k]) > 1e-12 * spec.J0) {
        ++failures[0];
        break;
      }
  }
  for (int t = 0; t < kInstances; ++t) {
    const ChainSpec spec = random_chain();
    const GroundState gs = solve_ground_state(spec);
    const Matrix& c = gs.correlations.entries;
    double trace = 0.0;
    for (std::size_t i = 0; i < c.rows(); ++i) trace += c(i, i);
    if (std::abs(trace - spec.L) > 1e-10 || max_abs_diff(c * c, c) > 1e-10) ++failures[1];
  }
  for (int t = 0; t < kInstances; ++t) {
    const ChainSpec spec = random_chain();
    const GroundState gs = solve_ground_state(spec);
    const Block b = random_block(spec.sites());
    const Block comp = Block::of(b.complement_sites(), spec.sites());
    bool ok = true;
    for (double n : {0.5, 1.0, 2.0, 3.0})
      ok = ok && std::abs(entropy_of_order(block_spectrum(gs.correlations, b), n) -
                          entropy_of_order(block_spectrum(gs.correlations, comp), n)) <= 1e-8;
    if (!ok) ++failures[2];
  }
  for (int t = 0; t < kInstances; ++t) {
    const ChainSpec spec = random_chain();
    const GroundState gs = solve_ground_state(spec);
    const auto nu = block_spectrum(gs.correlations, random_block(spec.sites()));
    double prev = INFINITY;
    for (double n : {0.5, 1.0, 2.0, 3.0}) {
      const double s = entropy_of_order(nu, n);
      if (s > prev + 1e-12) {
        ++failures[3];
        break;
      }
      prev = s;
    }
  }
  for (int t = 0; t < kInstances; ++t) {
    const double c = 0.2 + 2.8 * unit(rng), cp = 4 * unit(rng) - 2, f = 4 * unit(rng) - 2;
    const int lo = 4 + static_cast<int>(unit(rng) * 16);
    const int hi = lo + 4 + static_cast<int>(unit(rng) * 76);
    std::vector<SizeEntropy> data;
    for (int L = lo; L <= hi; ++L)
      data.push_back({L, c / 6 * std::log(L) + cp + f * parity_sign(L) / L});
    const FitResult r = fit_cft_halfchain(data);
    if (std::abs(r.coefficient("c") - c) > 1e-9 || std::abs(r.coefficient("c_prime") - cp) > 1e-9 ||
        std::abs(r.coefficient("f") - f) > 1e-9)
      ++failures[4];
  }
  for (int t = 0; t < kInstances; ++t) {
    const double h = t % 10 == 0 ? 0.0 : std::exp(13.5 * unit(rng) - 12.0);
    const double x = 60 * unit(rng) - 30;
    if (h * std::abs(x) > 700) continue;
    const double back = inverse_coordinate_map(coordinate_map(x, h), h);
    if (std::abs(back - x) > 1e-10 * std::abs(x)) ++failures[5];
  }

  const char* names[] = {"particle-hole", "C idempotence/trace", "S(B)=S(B')", "Renyi monotone",
                         "fit recovery", "map round-trip"};
  for (int i = 0; i < 6; ++i) {
    v.detail << (i ? ", " : "") << names[i] << ' ' << failures[i] << '/' << kInstances;
    v.require(failures[i] == 0, names[i]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence (2L <= 8)", 10.0, oracle_equivalence},
      {2, "central charge at h=0", 120.0, central_charge},
      {3, "volume law at h=4, L=8", 0.0, volume_law},
      {4, "rainbow structure from SDRG", 0.0, rainbow_structure},
      {5, "z-family asymptotics", 300.0, z_family},
      {6, "weak-disorder prediction", 0.0, weak_disorder},
      {7, "gap closure", 0.0, gap_closure},
      {8, "property suites", 0.0, property_suites},
  };

  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::stoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0) v.require(seconds < c.time_limit_s, "runtime < " + std::to_string(c.time_limit_s) + " s");
    std::printf("%s criterion %d: %s | %s | %.2f s\n", v.pass ? "PASS" : "FAIL", c.id, c.title,
                v.detail.str().c_str(), seconds);
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
