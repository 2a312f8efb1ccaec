#ifndef MOTIFMAP_LIKELIHOOD_HPP
#define MOTIFMAP_LIKELIHOOD_HPP

#include <cstdint>
#include <random>

#include "motifmap/core.hpp"

namespace motifmap {

using Rng = std::mt19937_64;

// log-partial likelihoods L(i) = log P(x_1..x_i | rho, Theta), i = 0..n.
// L(0) = 0; -inf marks prefixes with no positive-probability partition.
struct ForwardTable {
  Vec log_prefix;

  int n() const { return static_cast<int>(log_prefix.size()) - 1; }
};

ForwardTable build_forward(const Sequence& seq, const Dictionary& dict);

// Exact log of Eq-style sum over all partitions, by the forward recursion.
// Words never cross record boundaries.
double sequence_loglik(const Sequence& seq, const Dictionary& dict);

// Draws one alignment from P(A | S, Theta, rho) by backward sampling over the
// forward table. Deterministic given the RNG state.
Alignment sample_alignment(const Sequence& seq, const Dictionary& dict, Rng& rng);
Alignment sample_alignment(const Sequence& seq, const Dictionary& dict,
                           std::uint64_t seed);

// log L(N, C | Theta, rho) = sum_l N_l log rho_l + sum_kji c_ijk log theta_ijk
// with 0 * log 0 = 0.
double complete_data_loglik(const CountSummary& counts, const Dictionary& dict);

}  // namespace motifmap

#endif
