#include "motifmap/map_score.hpp"

#include <cmath>
#include <limits>

namespace motifmap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

Vec to_vec(const Eigen::Ref<const VecI>& v) { return v.cast<double>(); }

MapScoreValue log_map_simple(const CountSummary& counts, const PriorSpec& priors) {
  const int d = counts.d;
  if (priors.beta0.size() != counts.word_counts.size())
    throw DimensionMismatch("beta0 length must equal number of words");
  if (priors.alpha.size() != d || priors.gamma.size() != d)
    throw DimensionMismatch("alpha/gamma length must equal alphabet size");
  priors.validate();

  MapScoreValue value;
  Vec n_words = to_vec(counts.word_counts);
  value.word_usage =
      log_dirichlet_norm(n_words + priors.beta0) - log_dirichlet_norm(priors.beta0);

  Vec n_letters = to_vec(counts.total_letter_counts());
  value.background = -(log_dirichlet_norm(n_letters + priors.alpha) -
                       log_dirichlet_norm(priors.alpha));

  const double log_norm_gamma = log_dirichlet_norm(priors.gamma);
  value.motif_columns = 0.0;
  for (const auto& ck : counts.column_counts)
    for (int j = 0; j < ck.cols(); ++j)
      value.motif_columns +=
          log_dirichlet_norm(ck.col(j).cast<double>() + priors.gamma) - log_norm_gamma;

  value.log_map = value.word_usage + value.background + value.motif_columns;
  return value;
}

}  // namespace

double log_dirichlet_norm(const Eigen::Ref<const Vec>& v) {
  if ((v.array() <= 0.0).any()) throw NonPositivePseudoCount();
  double acc = 0.0;
  for (int i = 0; i < v.size(); ++i) acc += std::lgamma(v[i]);
  return acc - std::lgamma(v.sum());
}

MapScoreValue log_map(const CountSummary& counts, const PriorSpec& priors) {
  if (!priors.is_mixture()) return log_map_simple(counts, priors);

  priors.validate();
  std::vector<MapScoreValue> parts;
  std::vector<double> weighted;
  parts.reserve(priors.mixture.size());
  for (const auto& [weight, component] : priors.mixture) {
    parts.push_back(log_map(counts, component));
    weighted.push_back(std::log(weight) + parts.back().log_map);
  }
  MapScoreValue value;
  value.log_map = logsumexp(weighted);
  // Posterior-weighted averages of the first two pieces keep the breakdown
  // additive; when components share beta0 and alpha this reduces to the
  // common word-usage and background terms exactly.
  double wu = 0.0, bg = 0.0;
  for (size_t i = 0; i < parts.size(); ++i) {
    double lambda = std::exp(weighted[i] - value.log_map);
    wu += lambda * parts[i].word_usage;
    bg += lambda * parts[i].background;
  }
  value.word_usage = wu;
  value.background = bg;
  value.motif_columns = value.log_map - wu - bg;
  return value;
}

double null_log_marginal(const Eigen::Ref<const VecI>& letter_counts,
                         const Eigen::Ref<const Vec>& alpha) {
  if (letter_counts.size() != alpha.size())
    throw DimensionMismatch("alpha length must equal alphabet size");
  return log_dirichlet_norm(letter_counts.cast<double>() + alpha) -
         log_dirichlet_norm(alpha);
}

namespace {

// Partition recursion over valid word ends; respects record boundaries.
void enumerate_rec(const Sequence& seq, const std::vector<int>& widths, int pos,
                   std::vector<Site>& stack, std::vector<Alignment>& out) {
  if (pos == seq.size()) {
    Alignment align;
    align.sites = stack;
    out.push_back(align);
    return;
  }
  enumerate_rec(seq, widths, pos + 1, stack, out);  // single letter
  for (int k = 0; k < static_cast<int>(widths.size()); ++k) {
    const int w = widths[static_cast<size_t>(k)];
    if (!seq.fits_in_record(pos, w)) continue;
    stack.push_back({pos, k});
    enumerate_rec(seq, widths, pos + w, stack, out);
    stack.pop_back();
  }
}

}  // namespace

double count_alignments(const Sequence& seq, const std::vector<int>& widths) {
  const int n = seq.size();
  for (int w : widths)
    if (w < 1) throw InvalidArgument("motif widths must be positive");
  std::vector<double> ways(static_cast<size_t>(n) + 1, 0.0);
  // counts partitions of the suffix starting at pos
  for (int pos = n; pos >= 0; --pos) {
    if (pos == n) {
      ways[static_cast<size_t>(pos)] = 1.0;
      continue;
    }
    double acc = ways[static_cast<size_t>(pos) + 1];
    for (int w : widths)
      if (seq.fits_in_record(pos, w)) acc += ways[static_cast<size_t>(pos + w)];
    ways[static_cast<size_t>(pos)] = acc;
  }
  return ways[0];
}

std::vector<Alignment> enumerate_alignments(const Sequence& seq,
                                            const std::vector<int>& widths,
                                            double cap) {
  double total = count_alignments(seq, widths);
  if (total > cap)
    throw InstanceTooLarge(std::to_string(total) + " alignments exceed cap");
  std::vector<Alignment> out;
  out.reserve(static_cast<size_t>(total));
  std::vector<Site> stack;
  enumerate_rec(seq, widths, 0, stack, out);
  return out;
}

double exact_bayes_numerator(const Sequence& seq, const PriorSpec& priors,
                             const std::vector<int>& widths, double cap) {
  const int d = seq.alphabet.size();
  if (priors.beta0.size() != d + static_cast<int>(widths.size()))
    throw DimensionMismatch("beta0 length must equal d + number of widths");

  Dictionary dict;
  dict.alphabet = seq.alphabet;
  for (int w : widths) dict.motifs.push_back(uniform_pwm(d, w));
  dict.rho = Vec::Constant(dict.size(), 1.0 / dict.size());

  const double log_norm_beta = log_dirichlet_norm(priors.beta0);
  const double log_norm_gamma = log_dirichlet_norm(priors.gamma);
  std::vector<double> terms;
  for (const auto& align : enumerate_alignments(seq, widths, cap)) {
    CountSummary counts = derive_counts(seq, dict, align);
    double term = log_dirichlet_norm(counts.word_counts.cast<double>() + priors.beta0) -
                  log_norm_beta;
    for (const auto& ck : counts.column_counts)
      for (int j = 0; j < ck.cols(); ++j)
        term += log_dirichlet_norm(ck.col(j).cast<double>() + priors.gamma) -
                log_norm_gamma;
    terms.push_back(term);
  }
  return logsumexp(terms);
}

namespace {

// Stirling form applied to Gamma(z) through Gamma(z) = Gamma((z-1) + 1):
// requires z > 1, which the count >= 2 precondition guarantees for every
// data-bearing argument.
double stirling_lgamma(double z) {
  double u = z - 1.0;
  return u * std::log(u) - u + 0.5 * std::log(2.0 * M_PI * u);
}

double stirling_log_norm(const Eigen::Ref<const Vec>& v) {
  double acc = 0.0;
  for (int i = 0; i < v.size(); ++i) acc += stirling_lgamma(v[i]);
  return acc - stirling_lgamma(v.sum());
}

}  // namespace

double stirling_log_map(const CountSummary& counts, const PriorSpec& priors) {
  if (priors.is_mixture())
    throw InvalidArgument("stirling_log_map expects a plain prior");
  priors.validate();
  if ((counts.word_counts.array() < 2).any()) throw CountsTooSmall();
  for (const auto& ck : counts.column_counts)
    if ((ck.array() < 2).any()) throw CountsTooSmall();
  if (priors.beta0.size() != counts.word_counts.size() ||
      priors.alpha.size() != counts.d || priors.gamma.size() != counts.d)
    throw DimensionMismatch("prior dimensions do not match counts");

  Vec n_words = counts.word_counts.cast<double>();
  double value = stirling_log_norm(n_words + priors.beta0) -
                 log_dirichlet_norm(priors.beta0);
  Vec n_letters = counts.total_letter_counts().cast<double>();
  value -= stirling_log_norm(n_letters + priors.alpha) -
           log_dirichlet_norm(priors.alpha);
  const double log_norm_gamma = log_dirichlet_norm(priors.gamma);
  for (const auto& ck : counts.column_counts)
    for (int j = 0; j < ck.cols(); ++j)
      value += stirling_log_norm(ck.col(j).cast<double>() + priors.gamma) -
               log_norm_gamma;
  return value;
}

}  // namespace motifmap
