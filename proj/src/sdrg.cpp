#include "rainbow/sdrg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

const char* to_string(BondType t) { return t == BondType::Bonding ? "bonding" : "antibonding"; }

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Node {
  RenormCoupling coupling;
  std::size_t prev = kNone;  // coupling to the left sharing coupling.left_site
  std::size_t next = kNone;
  bool alive = true;
};

struct QueueEntry {
  double log_magnitude;
  std::size_t left_site;
  std::size_t node;
};

// Max-heap on magnitude; equal magnitudes pop the smaller left site first.
struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.log_magnitude != b.log_magnitude) return a.log_magnitude < b.log_magnitude;
    return a.left_site > b.left_site;
  }
};

}  // namespace

ValenceBondState run_sdrg_log(const std::vector<double>& log_magnitudes,
                              const std::vector<int>& signs) {
  if (log_magnitudes.empty()) throw InvalidArgument("run_sdrg: empty coupling profile");
  if (signs.size() != log_magnitudes.size())
    throw InvalidArgument("run_sdrg: sign and magnitude lists differ in length");

  const std::size_t n_bonds = log_magnitudes.size();
  std::vector<Node> nodes;
  nodes.reserve(2 * n_bonds);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;

  for (std::size_t i = 0; i < n_bonds; ++i) {
    if (!std::isfinite(log_magnitudes[i]))
      throw InvalidArgument("run_sdrg: coupling " + std::to_string(i) + " is zero or not finite");
    if (signs[i] != 1 && signs[i] != -1)
      throw InvalidArgument("run_sdrg: signs must be +1 or -1");
    Node node;
    node.coupling = {log_magnitudes[i], signs[i], i, i + 1};
    node.prev = i == 0 ? kNone : i - 1;
    node.next = i + 1 == n_bonds ? kNone : i + 1;
    nodes.push_back(node);
    queue.push({log_magnitudes[i], i, i});
  }

  ValenceBondState vbs;
  vbs.n_sites = n_bonds + 1;

  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (!nodes[top.node].alive) continue;

    const Node strongest = nodes[top.node];
    const RenormCoupling& jmax = strongest.coupling;
    vbs.bonds.push_back({jmax.left_site, jmax.right_site,
                         jmax.sign > 0 ? BondType::Bonding : BondType::Antibonding,
                         jmax.log_magnitude});
    nodes[top.node].alive = false;

    const std::size_t left = strongest.prev;
    const std::size_t right = strongest.next;
    if (left != kNone) nodes[left].alive = false;
    if (right != kNone) nodes[right].alive = false;

    if (left != kNone && right != kNone) {
      const RenormCoupling& jl = nodes[left].coupling;
      const RenormCoupling& jr = nodes[right].coupling;
      Node merged;
      merged.coupling = {jl.log_magnitude + jr.log_magnitude - jmax.log_magnitude,
                         -jl.sign * jr.sign * jmax.sign, jl.left_site, jr.right_site};
      merged.prev = nodes[left].prev;
      merged.next = nodes[right].next;
      const std::size_t id = nodes.size();
      nodes.push_back(merged);
      if (merged.prev != kNone) nodes[merged.prev].next = id;
      if (merged.next != kNone) nodes[merged.next].prev = id;
      queue.push({merged.coupling.log_magnitude, merged.coupling.left_site, id});
    } else if (left != kNone) {
      const std::size_t outer = nodes[left].prev;
      if (outer != kNone) nodes[outer].next = kNone;
    } else if (right != kNone) {
      const std::size_t outer = nodes[right].next;
      if (outer != kNone) nodes[outer].prev = kNone;
    }
  }
  return vbs;
}

ValenceBondState run_sdrg(const CouplingProfile& profile) {
  if (profile.bonds.empty()) throw InvalidArgument("run_sdrg: empty coupling profile");
  std::vector<double> logs(profile.bonds.size());
  std::vector<int> signs(profile.bonds.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const double j = profile.bonds[i];
    if (j == 0.0 || !std::isfinite(j))
      throw InvalidArgument("run_sdrg: coupling " + std::to_string(i) + " is zero or not finite");
    logs[i] = std::log(std::abs(j));
    signs[i] = j > 0.0 ? 1 : -1;
  }
  return run_sdrg_log(logs, signs);
}

ValenceBondState run_sdrg(const ChainSpec& spec) {
  const auto logs = log_coupling_profile(spec);
  return run_sdrg_log(logs, std::vector<int>(logs.size(), 1));
}

double bond_count_entropy(const ValenceBondState& vbs, const Block& b) {
  if (b.chain_sites() != vbs.n_sites)
    throw InvalidArgument("bond_count_entropy: block and valence-bond state differ in chain size");
  std::size_t cut = 0;
  for (const auto& bond : vbs.bonds)
    if (b.contains(bond.site_a) != b.contains(bond.site_b)) ++cut;
  return static_cast<double>(cut) * std::numbers::ln2;
}

bool is_rainbow(const ValenceBondState& vbs, int L) {
  if (L < 1 || vbs.n_sites != 2 * static_cast<std::size_t>(L)) return false;
  if (vbs.bonds.size() != static_cast<std::size_t>(L)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(L) + 1, false);
  for (const auto& bond : vbs.bonds) {
    const std::size_t a = std::min(bond.site_a, bond.site_b);
    const std::size_t b = std::max(bond.site_a, bond.site_b);
    // (L-k, L-1+k) <=> a + b = 2L - 1
    if (a + b != vbs.n_sites - 1) return false;
    const std::size_t k = static_cast<std::size_t>(L) - a;
    if (seen[k]) return false;
    seen[k] = true;
  }
  return true;
}

EntropyProfile sdrg_entropy_profile(const ValenceBondState& vbs, const ChainSpec& spec) {
  if (vbs.n_sites != spec.sites())
    throw InvalidArgument("sdrg_entropy_profile: chain size mismatch");
  // Prefix sweep: a bond is cut by the left block [0, ell) iff a < ell <= b.
  std::vector<long> delta(vbs.n_sites + 1, 0);
  for (const auto& bond : vbs.bonds) {
    const std::size_t a = std::min(bond.site_a, bond.site_b);
    const std::size_t b = std::max(bond.site_a, bond.site_b);
    delta[a + 1] += 1;
    delta[b + 1] -= 1;
  }
  EntropyProfile profile;
  profile.spec = spec;
  profile.order = 1.0;
  long cut = 0;
  for (std::size_t ell = 1; ell < vbs.n_sites; ++ell) {
    cut += delta[ell];
    profile.samples.push_back({ell, static_cast<double>(cut) * std::numbers::ln2});
  }
  return profile;
}

std::string render_arc_diagram(const ValenceBondState& vbs) {
  constexpr std::size_t kSpacing = 3;
  const std::size_t width = vbs.n_sites == 0 ? 0 : (vbs.n_sites - 1) * kSpacing + 1;

  // Nesting level: 1 + deepest bond strictly inside the arc.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& b : vbs.bonds) arcs.emplace_back(std::min(b.site_a, b.site_b), std::max(b.site_a, b.site_b));
  std::vector<std::size_t> order(arcs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return arcs[x].second - arcs[x].first < arcs[y].second - arcs[y].first;
  });
  std::vector<std::size_t> level(arcs.size(), 1);
  std::size_t top = 0;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    const std::size_t i = order[oi];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      const std::size_t j = order[oj];
      if (arcs[j].first > arcs[i].first && arcs[j].second < arcs[i].second)
        level[i] = std::max(level[i], level[j] + 1);
    }
    top = std::max(top, level[i]);
  }

  std::ostringstream out;
  for (std::size_t row = top; row >= 1; --row) {
    std::string line(width, ' ');
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (level[i] < row) continue;
      const std::size_t ca = arcs[i].first * kSpacing;
      const std::size_t cb = arcs[i].second * kSpacing;
      if (level[i] == row) {
        for (std::size_t c = ca; c <= cb; ++c) line[c] = '-';
        line[ca] = '+';
        line[cb] = '+';
        line[(ca + cb) / 2] = vbs.bonds[i].type == BondType::Bonding ? 'B' : 'A';
      } else {
        line[ca] = '|';
        line[cb] = '|';
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  std::string sites(width, ' ');
  for (std::size_t i = 0; i < vbs.n_sites; ++i) sites[i * kSpacing] = 'o';
  out << sites << '\n';
  return out.str();
}

}  // namespace rainbow
