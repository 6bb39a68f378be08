#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/chain_model.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow {

/// A set of chain sites (array indices), sorted and duplicate-free.
/// Contiguity is not required.
class Block {
 public:
  /// Validates: non-empty, all indices < n_sites, no duplicates.
  static Block of(std::vector<std::size_t> sites, std::size_t n_sites);
  /// {0, ..., ell-1}
  static Block left(std::size_t ell, std::size_t n_sites);
  /// {0, ..., L-1}
  static Block half_chain(int L);

  const std::vector<std::size_t>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  std::size_t chain_sites() const { return n_sites_; }
  bool contains(std::size_t site) const;

  /// Sites of the chain not in this block (may be empty).
  std::vector<std::size_t> complement_sites() const;

 private:
  Block(std::vector<std::size_t> sites, std::size_t n_sites)
      : sites_(std::move(sites)), n_sites_(n_sites) {}
  std::vector<std::size_t> sites_;
  std::size_t n_sites_ = 0;
};

struct EntropyOptions {
  double clamp_eps = 1e-12;        // ν within this of 0 or 1 contributes nothing
  double validity_window = 1e-9;   // ν further than this outside [0,1] is an error
};

/// Eigenvalues ν_p of C[B,B], ascending, clamped into [0,1].
/// Throws ConsistencyError for ν outside [-window, 1+window].
std::vector<double> block_spectrum(const CorrelationMatrix& c, const Block& b,
                                   const EntropyOptions& opts = {});

/// Clamp/validate an arbitrary list of correlation eigenvalues (sorted ascending).
std::vector<double> sanitize_block_spectrum(std::vector<double> nu, const EntropyOptions& opts = {});

double von_neumann_from_spectrum(const std::vector<double>& nu, const EntropyOptions& opts = {});
/// n > 0, n != 1; throws InvalidArgument otherwise.
double renyi_from_spectrum(const std::vector<double>& nu, double n, const EntropyOptions& opts = {});

double renyi_entropy(const CorrelationMatrix& c, const Block& b, double n,
                     const EntropyOptions& opts = {});
double von_neumann_entropy(const CorrelationMatrix& c, const Block& b,
                           const EntropyOptions& opts = {});

/// von Neumann for n == 1, Rényi otherwise.
double entropy_of_order(const std::vector<double>& nu, double n, const EntropyOptions& opts = {});

struct EntropySample {
  std::size_t ell = 0;
  double entropy = 0.0;  // nats
};

struct EntropyProfile {
  ChainSpec spec;
  double order = 1.0;
  std::vector<EntropySample> samples;
};

/// Left-block entropies for ell = 1..2L-1 from a single diagonalization.
EntropyProfile entropy_profile(const ChainSpec& spec, double n = 1.0,
                               const EntropyOptions& opts = {});

/// Entropy of the block {0..L-1}; only the L×L correlation block is formed.
double half_chain_entropy(const ChainSpec& spec, double n = 1.0, const EntropyOptions& opts = {});

}  // namespace rainbow
