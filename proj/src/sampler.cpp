#include "motifmap/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "motifmap/likelihood.hpp"
#include "motifmap/parallel.hpp"
#include "motifmap/random.hpp"

namespace motifmap {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void DaConfig::validate() const {
  if (burn_in < 0 || iterations <= burn_in)
    throw TooFewIterations("need iterations > burn_in >= 0");
  if (chains < 1) throw InvalidArgument("need at least one chain");
}

PriorSpec expand_priors(const PriorSpec& priors, int d, int num_motifs,
                        double motif_usage_pseudocount) {
  PriorSpec out = priors;
  if (out.beta0.size() == 0) out.beta0 = Vec::Ones(d);
  if (out.beta0.size() < d)
    throw DimensionMismatch("beta0 template must cover the letters");
  if (out.beta0.size() < d + num_motifs) {
    Vec grown(d + num_motifs);
    grown.head(out.beta0.size()) = out.beta0;
    grown.tail(d + num_motifs - out.beta0.size())
        .setConstant(motif_usage_pseudocount);
    out.beta0 = grown;
  } else {
    out.beta0 = out.beta0.head(d + num_motifs).eval();
  }
  if (out.alpha.size() == 0) out.alpha = out.beta0.head(d);
  if (out.gamma.size() == 0) out.gamma = Vec::Constant(d, 1.0 / d);
  out.validate();
  return out;
}

namespace {

DaTrace run_single_chain(const Sequence& seq, const Dictionary& init_dict,
                         const PriorSpec& priors, const DaConfig& cfg,
                         int chain_index) {
  Dictionary dict = init_dict;
  Rng rng(cfg.seed + static_cast<std::uint64_t>(chain_index));

  DaTrace trace;
  trace.chain_index = chain_index;
  trace.best_log_map = kNegInf;
  trace.best_nonempty_log_map = kNegInf;
  trace.log_map_trace.reserve(static_cast<size_t>(cfg.iterations - cfg.burn_in));

  for (int iter = 0; iter < cfg.iterations; ++iter) {
    Alignment align = sample_alignment(seq, dict, rng);
    CountSummary counts = derive_counts(seq, dict, align);
    double score = log_map(counts, priors).log_map;
    if (iter >= cfg.burn_in) {
      trace.log_map_trace.push_back(score);
      if (score > trace.best_log_map) {
        trace.best_log_map = score;
        trace.best_alignment = align;
      }
      if (!align.empty() && score > trace.best_nonempty_log_map) {
        trace.best_nonempty_log_map = score;
        trace.best_nonempty_alignment = align;
      }
    }
    // conjugate updates
    dict.rho = sample_dirichlet(
        rng, counts.word_counts.cast<double>() + priors.beta0);
    for (size_t k = 0; k < dict.motifs.size(); ++k) {
      auto& pwm = dict.motifs[k];
      const auto& ck = counts.column_counts[k];
      for (int j = 0; j < pwm.width(); ++j)
        pwm.columns.col(j) =
            sample_dirichlet(rng, ck.col(j).cast<double>() + priors.gamma);
    }
  }
  return trace;
}

}  // namespace

DaTrace run_da(const Sequence& seq, const Dictionary& init_dict,
               const DaConfig& cfg) {
  cfg.validate();
  init_dict.validate();
  PriorSpec priors =
      expand_priors(cfg.priors, init_dict.d(),
                    static_cast<int>(init_dict.motifs.size()),
                    cfg.motif_usage_pseudocount);

  std::vector<DaTrace> chains(static_cast<size_t>(cfg.chains));
  parallel_for(cfg.chains, [&](int c) {
    chains[static_cast<size_t>(c)] = run_single_chain(seq, init_dict, priors, cfg, c);
  });
  int best = 0;
  for (int c = 1; c < cfg.chains; ++c)
    if (chains[static_cast<size_t>(c)].best_log_map >
        chains[static_cast<size_t>(best)].best_log_map)
      best = c;
  return chains[static_cast<size_t>(best)];
}

namespace {

// Most frequent w-mers among windows that stay clear of the sites already in
// the alignment; ties broken lexicographically. Seeds candidate PWMs.
std::vector<std::string> top_uncovered_wmers(const Sequence& seq,
                                             const Dictionary& dict,
                                             const Alignment& align, int w,
                                             int how_many) {
  std::vector<char> covered(static_cast<size_t>(seq.size()), 0);
  for (const auto& site : align.sites) {
    int width = dict.motif_width(site.motif);
    for (int j = 0; j < width; ++j)
      covered[static_cast<size_t>(site.pos + j)] = 1;
  }
  std::map<std::string, int> tally;
  for (int pos = 0; pos + w <= seq.size(); ++pos) {
    if (!seq.fits_in_record(pos, w)) continue;
    bool clear = true;
    for (int j = 0; j < w && clear; ++j)
      clear = covered[static_cast<size_t>(pos + j)] == 0;
    if (!clear) continue;
    std::string word;
    word.reserve(static_cast<size_t>(w));
    for (int j = 0; j < w; ++j)
      word.push_back(seq.alphabet.letter(seq.data[static_cast<size_t>(pos + j)]));
    tally[word] += 1;
  }
  std::vector<std::pair<int, std::string>> ranked;
  ranked.reserve(tally.size());
  for (const auto& [word, count] : tally) ranked.emplace_back(count, word);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<std::string> out;
  for (int i = 0; i < how_many && i < static_cast<int>(ranked.size()); ++i)
    out.push_back(ranked[static_cast<size_t>(i)].second);
  return out;
}

Pwm seed_pwm_from_word(const Alphabet& alphabet, const std::string& word,
                       const Vec& gamma) {
  const int d = alphabet.size();
  const double strength = 2.0;
  Pwm pwm;
  pwm.columns = Mat::Zero(d, static_cast<int>(word.size()));
  for (int j = 0; j < static_cast<int>(word.size()); ++j) {
    Vec col = gamma;
    col[alphabet.index_of(word[static_cast<size_t>(j)])] += strength;
    pwm.columns.col(j) = col / col.sum();
  }
  return pwm;
}

// Posterior-mean refit of the dictionary at a fixed alignment.
Dictionary fit_dictionary(const Sequence& seq, Dictionary dict,
                          const Alignment& align, const PriorSpec& priors) {
  CountSummary counts = derive_counts(seq, dict, align);
  Vec usage = counts.word_counts.cast<double>() + priors.beta0;
  dict.rho = usage / usage.sum();
  for (size_t k = 0; k < dict.motifs.size(); ++k) {
    const auto& ck = counts.column_counts[k];
    for (int j = 0; j < dict.motifs[k].width(); ++j) {
      Vec col = ck.col(j).cast<double>() + priors.gamma;
      dict.motifs[k].columns.col(j) = col / col.sum();
    }
  }
  return dict;
}

}  // namespace

DiscoveryResult progressive_discover(const Sequence& seq, const DaConfig& cfg,
                                     int max_motifs) {
  cfg.validate();
  if (max_motifs < 1) throw InvalidArgument("max_motifs must be at least 1");
  if (cfg.widths.empty()) throw InvalidArgument("no candidate widths configured");
  for (int w : cfg.widths)
    if (w < 2) throw InvalidArgument("candidate widths must be at least 2");

  const Alphabet& alphabet = seq.alphabet;
  const int d = alphabet.size();

  DiscoveryResult result;
  result.dictionary.alphabet = alphabet;
  {
    Vec counts = seq.letter_counts().cast<double>() +
                 expand_priors(cfg.priors, d, 0, cfg.motif_usage_pseudocount).beta0;
    result.dictionary.rho = counts / counts.sum();
  }
  // Empty-alignment score of the letters-only dictionary (0 when alpha
  // matches the letter pseudo-counts).
  {
    PriorSpec base = expand_priors(cfg.priors, d, 0, cfg.motif_usage_pseudocount);
    CountSummary counts = derive_counts(seq, result.dictionary, Alignment{});
    result.final_log_map = log_map(counts, base).log_map;
  }

  for (int round = 0; round < max_motifs; ++round) {
    const int t = static_cast<int>(result.dictionary.motifs.size());
    PriorSpec priors =
        expand_priors(cfg.priors, d, t + 1, cfg.motif_usage_pseudocount);

    bool have_candidate = false;
    DaTrace best_trace;
    Dictionary best_dict;
    best_trace.best_log_map = kNegInf;

    for (size_t widx = 0; widx < cfg.widths.size(); ++widx) {
      const int w = cfg.widths[widx];
      if (w > seq.size()) continue;
      std::vector<std::string> seeds = top_uncovered_wmers(
          seq, result.dictionary, result.best_alignment, w, cfg.chains);

      Dictionary candidate = result.dictionary;
      candidate.motifs.push_back(uniform_pwm(d, w));
      // modest initial usage mass so fresh motifs can recruit sites
      Vec usage(candidate.size());
      usage.head(d) = seq.letter_counts().cast<double>() + Vec::Ones(d);
      for (int k = 0; k < t; ++k) {
        double sites = 0;
        for (const auto& s : result.best_alignment.sites)
          if (s.motif == k) sites += 1;
        usage[d + k] = sites + 1.0;
      }
      usage[d + t] = std::max(2.0, 0.002 * seq.size());
      candidate.rho = usage / usage.sum();

      DaConfig chain_cfg = cfg;
      chain_cfg.chains = 1;
      std::vector<DaTrace> traces(static_cast<size_t>(cfg.chains));
      parallel_for(cfg.chains, [&](int c) {
        Dictionary chain_dict = candidate;
        if (!seeds.empty())
          chain_dict.motifs.back() = seed_pwm_from_word(
              alphabet, seeds[static_cast<size_t>(c) % seeds.size()],
              priors.gamma);
        DaConfig one = chain_cfg;
        one.seed = cfg.seed + 1000003ULL * static_cast<std::uint64_t>(round) +
                   1009ULL * static_cast<std::uint64_t>(widx) +
                   static_cast<std::uint64_t>(c);
        traces[static_cast<size_t>(c)] = run_da(seq, chain_dict, one);
        traces[static_cast<size_t>(c)].chain_index = c;
      });
      for (const auto& trace : traces) {
        if (trace.best_log_map > best_trace.best_log_map) {
          best_trace = trace;
          best_dict = candidate;
          have_candidate = true;
        }
      }
    }

    if (!have_candidate) break;
    double delta = best_trace.best_log_map - result.final_log_map;
    if (!(delta > 0.0) || !(best_trace.best_log_map > 0.0)) break;

    PriorSpec fitted_priors = priors;
    best_dict = fit_dictionary(seq, best_dict, best_trace.best_alignment,
                               fitted_priors);
    result.dictionary = best_dict;
    result.best_alignment = best_trace.best_alignment;
    result.delta_log_map.push_back(delta);
    result.final_log_map = best_trace.best_log_map;
    result.final_trace = best_trace;
  }
  return result;
}

}  // namespace motifmap
