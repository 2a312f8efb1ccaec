#ifndef MOTIFMAP_SENSITIVITY_HPP
#define MOTIFMAP_SENSITIVITY_HPP

#include <utility>
#include <vector>

#include "motifmap/core.hpp"

namespace motifmap {

// epsilon-contamination pi = (1 - epsilon) pi0 + epsilon q over the motif
// column prior.
struct ContaminationSpec {
  double epsilon = 0.0;
  PriorSpec base;
  PriorSpec contaminant;

  void validate() const;
};

// Mixture-of-Dirichlet column prior; a single (weight 1) component is the
// plain product-Dirichlet case.
struct ColumnPrior {
  std::vector<std::pair<double, Vec>> components;

  static ColumnPrior single(const Vec& gamma);
  void validate(int d) const;
};

// Grid of contamination pseudo-count vectors parameterized by
// delta* = delta_A + delta_T: delta = (d*/2, (1-d*)/2, (1-d*)/2, d*/2).
struct DeltaGrid {
  std::vector<double> delta_star;

  static DeltaGrid uniform(int points);
  static Vec delta_vector(double delta_star);
};

struct SensitivityRow {
  double delta_star = 0.0;
  Vec theta_star;  // per-column maximal contaminated posterior frequencies
  double d_m = 0.0;
  double d_k = 0.0;
  double d_e = 0.0;
  double log_map = 0.0;  // contaminated motif-column logMAP contribution
};

struct SensitivityReport {
  double epsilon = 0.0;
  std::vector<SensitivityRow> rows;
  double log_map_min = 0.0;
  double log_map_max = 0.0;
};

// log of the product-Dirichlet marginal of a d x w count matrix under the
// column prior gamma: sum_j [logB(c_j + gamma) - logB(gamma)].
double product_dirichlet_log_marginal(const Eigen::Ref<const Mat>& counts,
                                      const Eigen::Ref<const Vec>& gamma);
double mixture_log_marginal(const Eigen::Ref<const Mat>& counts,
                            const ColumnPrior& prior);

// lambda_{q,eps} = (1-eps) m(x|pi0) / [(1-eps) m(x|pi0) + eps m(x|q)],
// computed in log space.
double lambda_weight(double epsilon, double log_m_pi0, double log_m_q);

// log[(1-eps) exp(log_map_pi0) + eps exp(log_map_q)]; the Eq-linear mixture
// of MAP scores on the probability scale.
double contaminated_map(double epsilon, double log_map_pi0, double log_map_q);

// Same mixture evaluated from a full prior pair on one count summary.
double contaminated_map(const ContaminationSpec& spec, const CountSummary& counts);

// Posterior mean of the column matrix under a mixture-of-Dirichlet prior.
Mat mixture_posterior_mean(const Eigen::Ref<const Mat>& counts,
                           const ColumnPrior& prior);

// Two-component case of the above; requires sum(gamma) = sum(delta) = 1,
// the regime of the closed-form display.
Mat contaminated_posterior_mean(const Eigen::Ref<const Mat>& counts,
                                const Eigen::Ref<const Vec>& gamma,
                                const Eigen::Ref<const Vec>& delta,
                                double epsilon);

// Sweeps the delta grid: contaminated posterior means, their per-column
// maxima, the D_M / D_K / D_E summaries against the grid mean, and the
// contaminated logMAP (motif-column part) whose range Fig-3-style plots show.
SensitivityReport delta_grid_profile(const Eigen::Ref<const Mat>& counts,
                                     const ColumnPrior& pi0,
                                     const DeltaGrid& grid, double epsilon);

// d mu_j / d beta_i for the posterior mean mu_j = (N_j+b_j)/sum(N+b);
// always bounded by 1 in magnitude.
double dmu_dbeta(const Eigen::Ref<const Vec>& word_counts,
                 const Eigen::Ref<const Vec>& beta0, int j, int i);

// Stirling-expanded d logMAP / d gamma_j for a single motif count matrix.
double dlogmap_dgamma(const Eigen::Ref<const Mat>& counts,
                      const Eigen::Ref<const Vec>& gamma, int j);

// Stirling-expanded d logMAP / d beta_k for a single-motif dictionary with
// alpha tied to the letter part of beta0. k indexes words 0..D-1; k = D-1 is
// the motif slot, whose influence grows without bound as beta_D shrinks.
double dlogmap_dbeta(const CountSummary& counts,
                     const Eigen::Ref<const Vec>& beta0, int k);

// True when beta_D < sum of the letter pseudo-counts, the regime where the
// word-usage prior has negligible local influence.
bool robust_beta_regime(const Eigen::Ref<const Vec>& beta0);

}  // namespace motifmap

#endif
