#ifndef MOTIFMAP_SAMPLER_HPP
#define MOTIFMAP_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "motifmap/core.hpp"
#include "motifmap/map_score.hpp"

namespace motifmap {

struct DaConfig {
  std::vector<int> widths;  // candidate widths searched by progressive_discover
  int iterations = 5000;
  int burn_in = 1000;
  int chains = 5;
  std::uint64_t seed = 0;
  // Prior template. beta0 may carry just the d letter pseudo-counts;
  // motif slots are appended with motif_usage_pseudocount as needed.
  PriorSpec priors;
  double motif_usage_pseudocount = 1.0;

  void validate() const;
};

// Post-burn-in record of one data-augmentation run. best_* track the highest
// scoring sampled alignment; the nonempty variants ignore empty alignments
// (log_map of -inf when none was sampled).
struct DaTrace {
  std::vector<double> log_map_trace;
  Alignment best_alignment;
  double best_log_map = 0.0;
  Alignment best_nonempty_alignment;
  double best_nonempty_log_map = 0.0;
  int chain_index = 0;
};

// Alternates alignment sampling (dynamic programming backward draw) with
// conjugate parameter draws Theta_k ~ PD(B + C_k), rho ~ Dirichlet(N + beta0),
// scoring every sampled alignment by logMAP. cfg.chains independent chains
// run from seeds cfg.seed + chain; the trace of the best-scoring chain is
// returned (ties: lowest chain index).
DaTrace run_da(const Sequence& seq, const Dictionary& init_dict,
               const DaConfig& cfg);

struct DiscoveryResult {
  Dictionary dictionary;        // letters plus accepted motifs, posterior-mean fitted
  Alignment best_alignment;     // sites of the accepted motifs
  std::vector<double> delta_log_map;  // logMAP increase per accepted motif
  double final_log_map = 0.0;
  DaTrace final_trace;  // winning chain of the last accepted round
};

// Progressive dictionary updating: repeatedly proposes one extra motif
// (searching cfg.widths, chains seeded from the most frequent w-mers not yet
// covered by the current alignment), accepts it iff the best logMAP improves
// and stays positive, and stops at the first rejection or max_motifs.
DiscoveryResult progressive_discover(const Sequence& seq, const DaConfig& cfg,
                                     int max_motifs);

// Expands a prior template to a dictionary with num_motifs motifs.
PriorSpec expand_priors(const PriorSpec& priors, int d, int num_motifs,
                        double motif_usage_pseudocount);

}  // namespace motifmap

#endif
