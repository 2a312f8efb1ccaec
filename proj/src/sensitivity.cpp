#include "motifmap/sensitivity.hpp"

#include <cmath>
#include <limits>

#include "motifmap/map_score.hpp"
#include "motifmap/parallel.hpp"

namespace motifmap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp2(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

void ContaminationSpec::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw InvalidArgument("epsilon must lie strictly in (0,1)");
  base.validate();
  contaminant.validate();
}

ColumnPrior ColumnPrior::single(const Vec& gamma) {
  ColumnPrior prior;
  prior.components.emplace_back(1.0, gamma);
  return prior;
}

void ColumnPrior::validate(int d) const {
  if (components.empty()) throw InvalidArgument("column prior has no components");
  double total = 0.0;
  for (const auto& [weight, gamma] : components) {
    if (weight <= 0.0) throw InvalidArgument("component weight must be positive");
    if (gamma.size() != d) throw DimensionMismatch("gamma length must equal d");
    if ((gamma.array() <= 0.0).any()) throw NonPositivePseudoCount();
    total += weight;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidArgument("component weights must sum to 1");
}

DeltaGrid DeltaGrid::uniform(int points) {
  if (points < 1) throw InvalidArgument("grid needs at least one point");
  DeltaGrid grid;
  grid.delta_star.reserve(static_cast<size_t>(points));
  for (int i = 1; i <= points; ++i)
    grid.delta_star.push_back(static_cast<double>(i) / (points + 1));
  return grid;
}

Vec DeltaGrid::delta_vector(double delta_star) {
  if (!(delta_star > 0.0 && delta_star < 1.0))
    throw InvalidArgument("delta* must lie strictly in (0,1)");
  Vec delta(4);
  delta << delta_star / 2.0, (1.0 - delta_star) / 2.0, (1.0 - delta_star) / 2.0,
      delta_star / 2.0;
  return delta;
}

double product_dirichlet_log_marginal(const Eigen::Ref<const Mat>& counts,
                                      const Eigen::Ref<const Vec>& gamma) {
  if (counts.rows() != gamma.size())
    throw DimensionMismatch("count rows must equal gamma length");
  const double log_norm = log_dirichlet_norm(gamma);
  double acc = 0.0;
  for (int j = 0; j < counts.cols(); ++j)
    acc += log_dirichlet_norm(counts.col(j) + gamma) - log_norm;
  return acc;
}

double mixture_log_marginal(const Eigen::Ref<const Mat>& counts,
                            const ColumnPrior& prior) {
  prior.validate(static_cast<int>(counts.rows()));
  double acc = kNegInf;
  for (const auto& [weight, gamma] : prior.components)
    acc = logsumexp2(acc,
                     std::log(weight) + product_dirichlet_log_marginal(counts, gamma));
  return acc;
}

double lambda_weight(double epsilon, double log_m_pi0, double log_m_q) {
  if (epsilon <= 0.0) return 1.0;
  if (epsilon >= 1.0) return 0.0;
  double log_num = std::log1p(-epsilon) + log_m_pi0;
  double log_den = logsumexp2(log_num, std::log(epsilon) + log_m_q);
  return std::exp(log_num - log_den);
}

double contaminated_map(double epsilon, double log_map_pi0, double log_map_q) {
  if (epsilon < 0.0 || epsilon > 1.0)
    throw InvalidArgument("epsilon must lie in [0,1]");
  if (epsilon == 0.0) return log_map_pi0;
  if (epsilon == 1.0) return log_map_q;
  return logsumexp2(std::log1p(-epsilon) + log_map_pi0,
                    std::log(epsilon) + log_map_q);
}

double contaminated_map(const ContaminationSpec& spec, const CountSummary& counts) {
  spec.validate();
  return contaminated_map(spec.epsilon, log_map(counts, spec.base).log_map,
                          log_map(counts, spec.contaminant).log_map);
}

Mat mixture_posterior_mean(const Eigen::Ref<const Mat>& counts,
                           const ColumnPrior& prior) {
  prior.validate(static_cast<int>(counts.rows()));
  if ((counts.array() < 0.0).any()) throw InvalidArgument("negative count");

  std::vector<double> log_post(prior.components.size());
  double total = kNegInf;
  for (size_t c = 0; c < prior.components.size(); ++c) {
    const auto& [weight, gamma] = prior.components[c];
    log_post[c] = std::log(weight) + product_dirichlet_log_marginal(counts, gamma);
    total = logsumexp2(total, log_post[c]);
  }
  Mat mean = Mat::Zero(counts.rows(), counts.cols());
  for (size_t c = 0; c < prior.components.size(); ++c) {
    const auto& gamma = prior.components[c].second;
    double lambda = std::exp(log_post[c] - total);
    for (int j = 0; j < counts.cols(); ++j) {
      Vec post = counts.col(j) + gamma;
      mean.col(j) += lambda * (post / post.sum());
    }
  }
  return mean;
}

Mat contaminated_posterior_mean(const Eigen::Ref<const Mat>& counts,
                                const Eigen::Ref<const Vec>& gamma,
                                const Eigen::Ref<const Vec>& delta,
                                double epsilon) {
  if (std::abs(gamma.sum() - 1.0) > 1e-9 || std::abs(delta.sum() - 1.0) > 1e-9)
    throw PseudoCountSumNotOne();
  if (epsilon < 0.0 || epsilon > 1.0)
    throw InvalidArgument("epsilon must lie in [0,1]");
  ColumnPrior prior;
  if (epsilon == 0.0) {
    prior = ColumnPrior::single(gamma);
  } else if (epsilon == 1.0) {
    prior = ColumnPrior::single(delta);
  } else {
    prior.components.emplace_back(1.0 - epsilon, gamma);
    prior.components.emplace_back(epsilon, delta);
  }
  return mixture_posterior_mean(counts, prior);
}

SensitivityReport delta_grid_profile(const Eigen::Ref<const Mat>& counts,
                                     const ColumnPrior& pi0,
                                     const DeltaGrid& grid, double epsilon) {
  if (grid.delta_star.empty()) throw InvalidArgument("empty delta grid");
  const int d = static_cast<int>(counts.rows());
  const int w = static_cast<int>(counts.cols());
  pi0.validate(d);
  if (d != 4)
    throw DimensionMismatch("the delta* parameterization is specific to d = 4");

  const double base_log_marginal = mixture_log_marginal(counts, pi0);

  SensitivityReport report;
  report.epsilon = epsilon;
  report.rows.resize(grid.delta_star.size());
  parallel_for(static_cast<int>(grid.delta_star.size()), [&](int idx) {
    SensitivityRow& row = report.rows[static_cast<size_t>(idx)];
    row.delta_star = grid.delta_star[static_cast<size_t>(idx)];
    Vec delta = DeltaGrid::delta_vector(row.delta_star);

    ColumnPrior contaminated = pi0;
    if (epsilon > 0.0) {
      contaminated.components.clear();
      for (const auto& [weight, gamma] : pi0.components)
        contaminated.components.emplace_back((1.0 - epsilon) * weight, gamma);
      contaminated.components.emplace_back(epsilon, delta);
    }
    Mat theta = mixture_posterior_mean(counts, contaminated);
    row.theta_star = theta.colwise().maxCoeff();

    row.log_map = contaminated_map(epsilon, base_log_marginal,
                                   product_dirichlet_log_marginal(counts, delta));
  });

  Vec theta_bar = Vec::Zero(w);
  for (const auto& row : report.rows) theta_bar += row.theta_star;
  theta_bar /= static_cast<double>(report.rows.size());

  report.log_map_min = std::numeric_limits<double>::infinity();
  report.log_map_max = kNegInf;
  for (auto& row : report.rows) {
    row.d_m = (row.theta_star - theta_bar).squaredNorm() / w;
    row.d_k = 0.0;
    row.d_e = 0.0;
    for (int i = 0; i < w; ++i) {
      row.d_k += row.theta_star[i] * std::log(row.theta_star[i] / theta_bar[i]);
      row.d_e -= row.theta_star[i] * std::log(row.theta_star[i]);
    }
    report.log_map_min = std::min(report.log_map_min, row.log_map);
    report.log_map_max = std::max(report.log_map_max, row.log_map);
  }
  return report;
}

double dmu_dbeta(const Eigen::Ref<const Vec>& word_counts,
                 const Eigen::Ref<const Vec>& beta0, int j, int i) {
  if (word_counts.size() != beta0.size())
    throw DimensionMismatch("word counts and beta0 must share length");
  if (j < 0 || j >= beta0.size() || i < 0 || i >= beta0.size())
    throw InvalidArgument("index out of range");
  Vec post = word_counts + beta0;
  const double total = post.sum();
  if (i == j) return (total - post[j]) / (total * total);
  return -post[j] / (total * total);
}

double dlogmap_dgamma(const Eigen::Ref<const Mat>& counts,
                      const Eigen::Ref<const Vec>& gamma, int j) {
  if (counts.rows() != gamma.size())
    throw DimensionMismatch("count rows must equal gamma length");
  if ((gamma.array() <= 0.0).any()) throw NonPositivePseudoCount();
  if (j < 0 || j >= gamma.size()) throw InvalidArgument("index out of range");

  const double gamma_sum = gamma.sum();
  const int w = static_cast<int>(counts.cols());
  double acc = 0.0;
  for (int p = 0; p < w; ++p) {
    double cj = counts(j, p) + gamma[j];
    double csum = counts.col(p).sum() + gamma_sum;
    acc += std::log(cj / csum) - 0.5 * (1.0 / cj - 1.0 / csum);
  }
  acc += w * (std::log(gamma_sum / gamma[j]) -
              0.5 * (1.0 / gamma_sum - 1.0 / gamma[j]));
  return acc;
}

double dlogmap_dbeta(const CountSummary& counts,
                     const Eigen::Ref<const Vec>& beta0, int k) {
  if (counts.num_motifs() != 1)
    throw MultiMotifUnsupported("the local beta analysis assumes one motif type");
  const int d = counts.d;
  if (beta0.size() != d + 1)
    throw DimensionMismatch("beta0 length must equal d + 1");
  if ((beta0.array() <= 0.0).any()) throw NonPositivePseudoCount();
  if (k < 0 || k > d) throw InvalidArgument("index out of range");

  Vec n1 = counts.word_counts.cast<double>();          // length d+1
  Vec n0 = counts.total_letter_counts().cast<double>();  // length d

  const double sum_beta_letters = beta0.head(d).sum();
  const double sum_beta_all = beta0.sum();
  const double sum_n1 = (n1 + beta0).sum();
  const double sum_n0 = (n0 + beta0.head(d)).sum();

  if (k == d) {
    double nd = n1[d] + beta0[d];
    return std::log(nd / sum_n1) - 0.5 * (sum_n1 - nd) / (nd * sum_n1) +
           std::log(1.0 + sum_beta_letters / beta0[d]) +
           0.5 * (1.0 / beta0[d] - 1.0 / sum_beta_all);
  }
  double t1 = std::log(n1[k] / n0[k]);
  double t2 = 0.5 * (n1[k] - n0[k]) /
              ((n1[k] + beta0[k]) * (n0[k] + beta0[k]));
  double t3 = std::log(sum_n0 / sum_n1);
  double t4 = std::log(sum_beta_all / sum_beta_letters);
  double t5 = 0.5 * (n0.sum() - n1.sum() - beta0[d]) / (sum_n1 * sum_n0);
  double t6 = 0.5 * (1.0 / sum_beta_letters - 1.0 / sum_beta_all);
  return t1 + t2 + t3 + t4 + t5 + t6;
}

bool robust_beta_regime(const Eigen::Ref<const Vec>& beta0) {
  const int dim = static_cast<int>(beta0.size());
  return beta0[dim - 1] < beta0.head(dim - 1).sum();
}

}  // namespace motifmap
