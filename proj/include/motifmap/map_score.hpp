#ifndef MOTIFMAP_MAP_SCORE_HPP
#define MOTIFMAP_MAP_SCORE_HPP

#include <vector>

#include "motifmap/core.hpp"

namespace motifmap {

// log of the Dirichlet normalizer B(v) = prod_i Gamma(v_i) / Gamma(sum_i v_i).
double log_dirichlet_norm(const Eigen::Ref<const Vec>& v);

// logMAP with its three additive pieces:
//   word_usage    = logB(N + beta0) - logB(beta0)
//   background    = -[logB(N0 + alpha) - logB(alpha)], N0 the raw letter tallies
//   motif_columns = sum_k sum_j [logB(c_jk + gamma) - logB(gamma)]
struct MapScoreValue {
  double log_map = 0.0;
  double word_usage = 0.0;
  double background = 0.0;
  double motif_columns = 0.0;
};

// Closed-form logMAP of an alignment's count summary. Mixture priors are
// scored as the log of the weighted average of the component MAP scores.
MapScoreValue log_map(const CountSummary& counts, const PriorSpec& priors);

// log p(S | M0): Dirichlet-multinomial marginal of the letter tallies.
double null_log_marginal(const Eigen::Ref<const VecI>& letter_counts,
                         const Eigen::Ref<const Vec>& alpha);

// All valid alignments of seq for one motif per width; throws
// InstanceTooLarge when their number exceeds cap.
std::vector<Alignment> enumerate_alignments(const Sequence& seq,
                                            const std::vector<int>& widths,
                                            double cap = 1e6);
double count_alignments(const Sequence& seq, const std::vector<int>& widths);

// log sum_A p(A, S | M1) by exhaustive enumeration; the Bayes factor
// numerator of the two-model comparison. beta0 must have length
// d + widths.size(). Empty widths gives the null marginal under beta0.
double exact_bayes_numerator(const Sequence& seq, const PriorSpec& priors,
                             const std::vector<int>& widths, double cap = 1e6);

// logMAP with every data-dependent log-gamma replaced by the Stirling form
// log G(z) ~ (z-1)log(z-1) - (z-1) + log(2 pi (z-1))/2; prior-only
// normalizers stay exact. Requires every count entry >= 2.
double stirling_log_map(const CountSummary& counts, const PriorSpec& priors);

}  // namespace motifmap

#endif
