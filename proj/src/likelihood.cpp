#include "motifmap/likelihood.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace motifmap {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_or_neg_inf(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

double logsumexp2(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// Precomputed log parameters and record-boundary lookup shared by the
// forward fill and the backward sampling pass.
struct ForwardContext {
  Vec log_rho;
  std::vector<Mat> log_columns;
  std::vector<int> seg_start;

  ForwardContext(const Sequence& seq, const Dictionary& dict) {
    log_rho.resize(dict.size());
    for (int l = 0; l < dict.size(); ++l) log_rho[l] = log_or_neg_inf(dict.rho[l]);
    log_columns.reserve(dict.motifs.size());
    for (const auto& pwm : dict.motifs) {
      Mat lc(pwm.depth(), pwm.width());
      for (int j = 0; j < pwm.width(); ++j)
        for (int i = 0; i < pwm.depth(); ++i)
          lc(i, j) = log_or_neg_inf(pwm.columns(i, j));
      log_columns.push_back(std::move(lc));
    }
    seg_start.resize(static_cast<size_t>(seq.size()));
    size_t rec = 0;
    for (int p = 0; p < seq.size(); ++p) {
      while (rec + 1 < seq.record_starts.size() && seq.record_starts[rec + 1] <= p)
        ++rec;
      seg_start[static_cast<size_t>(p)] = seq.record_starts[rec];
    }
  }

  double log_emission(const Sequence& seq, int motif, int pos) const {
    const Mat& lc = log_columns[static_cast<size_t>(motif)];
    double acc = 0.0;
    for (int j = 0; j < lc.cols(); ++j)
      acc += lc(seq.data[static_cast<size_t>(pos + j)], j);
    return acc;
  }
};

ForwardTable fill_forward(const Sequence& seq, const Dictionary& dict,
                          const ForwardContext& ctx) {
  const int n = seq.size();
  const int d = dict.d();
  ForwardTable table;
  table.log_prefix = Vec::Constant(n + 1, kNegInf);
  table.log_prefix[0] = 0.0;
  for (int i = 1; i <= n; ++i) {
    double acc =
        table.log_prefix[i - 1] + ctx.log_rho[seq.data[static_cast<size_t>(i - 1)]];
    for (int k = 0; k < static_cast<int>(dict.motifs.size()); ++k) {
      const int w = dict.motif_width(k);
      const int start = i - w;
      if (start < 0 || start < ctx.seg_start[static_cast<size_t>(i - 1)]) continue;
      if (table.log_prefix[start] == kNegInf || ctx.log_rho[d + k] == kNegInf)
        continue;
      double cand =
          table.log_prefix[start] + ctx.log_rho[d + k] + ctx.log_emission(seq, k, start);
      acc = logsumexp2(acc, cand);
    }
    table.log_prefix[i] = acc;
  }
  return table;
}

void check_dictionary(const Dictionary& dict) {
  if (dict.size() == 0 || dict.rho.size() == 0) throw EmptyDictionary();
  dict.validate();
}

}  // namespace

ForwardTable build_forward(const Sequence& seq, const Dictionary& dict) {
  check_dictionary(dict);
  ForwardContext ctx(seq, dict);
  return fill_forward(seq, dict, ctx);
}

double sequence_loglik(const Sequence& seq, const Dictionary& dict) {
  ForwardTable table = build_forward(seq, dict);
  double value = table.log_prefix[seq.size()];
  if (!(value > kNegInf))
    throw ZeroLikelihood("no positive-probability partition of the sequence");
  return value;
}

Alignment sample_alignment(const Sequence& seq, const Dictionary& dict, Rng& rng) {
  check_dictionary(dict);
  ForwardContext ctx(seq, dict);
  ForwardTable table = fill_forward(seq, dict, ctx);
  const int n = seq.size();
  const int d = dict.d();
  if (!(table.log_prefix[n] > kNegInf))
    throw ZeroLikelihood("no positive-probability partition of the sequence");

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Alignment align;
  int i = n;
  while (i > 0) {
    const int seg = ctx.seg_start[static_cast<size_t>(i - 1)];
    double letter_term =
        table.log_prefix[i - 1] + ctx.log_rho[seq.data[static_cast<size_t>(i - 1)]];
    double total = letter_term;
    std::vector<std::pair<int, double>> motif_terms;  // (motif, log weight)
    for (int k = 0; k < static_cast<int>(dict.motifs.size()); ++k) {
      const int w = dict.motif_width(k);
      const int start = i - w;
      if (start < 0 || start < seg) continue;
      if (table.log_prefix[start] == kNegInf || ctx.log_rho[d + k] == kNegInf)
        continue;
      double term =
          table.log_prefix[start] + ctx.log_rho[d + k] + ctx.log_emission(seq, k, start);
      if (term == kNegInf) continue;
      motif_terms.emplace_back(k, term);
      total = logsumexp2(total, term);
    }
    double u = unif(rng);
    int chosen = -1;  // -1 = single letter
    double cum = std::exp(letter_term - total);
    if (u > cum) {
      for (const auto& [k, term] : motif_terms) {
        cum += std::exp(term - total);
        chosen = k;
        if (u <= cum) break;
      }
    }
    if (chosen < 0) {
      i -= 1;
    } else {
      const int w = dict.motif_width(chosen);
      align.sites.push_back({i - w, chosen});
      i -= w;
    }
  }
  align.sort_sites();
  return align;
}

Alignment sample_alignment(const Sequence& seq, const Dictionary& dict,
                           std::uint64_t seed) {
  Rng rng(seed);
  return sample_alignment(seq, dict, rng);
}

double complete_data_loglik(const CountSummary& counts, const Dictionary& dict) {
  if (counts.word_counts.size() != dict.size() ||
      counts.num_motifs() != static_cast<int>(dict.motifs.size()) ||
      counts.d != dict.d())
    throw DimensionMismatch("counts do not match dictionary");
  for (int k = 0; k < counts.num_motifs(); ++k)
    if (counts.column_counts[static_cast<size_t>(k)].cols() != dict.motif_width(k))
      throw DimensionMismatch("column count width mismatch");

  double acc = 0.0;
  for (int l = 0; l < dict.size(); ++l) {
    int nl = counts.word_counts[l];
    if (nl == 0) continue;
    double p = dict.rho[l];
    if (p <= 0.0) return kNegInf;
    acc += nl * std::log(p);
  }
  for (int k = 0; k < counts.num_motifs(); ++k) {
    const auto& ck = counts.column_counts[static_cast<size_t>(k)];
    const auto& theta = dict.motifs[static_cast<size_t>(k)].columns;
    for (int j = 0; j < ck.cols(); ++j)
      for (int i = 0; i < ck.rows(); ++i) {
        int c = ck(i, j);
        if (c == 0) continue;
        double p = theta(i, j);
        if (p <= 0.0) return kNegInf;
        acc += c * std::log(p);
      }
  }
  return acc;
}

}  // namespace motifmap
