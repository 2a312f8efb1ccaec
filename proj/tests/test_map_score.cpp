#include <doctest.h>

#include <cmath>
#include <random>

#include "motifmap/likelihood.hpp"
#include "motifmap/map_score.hpp"
#include "oracles.hpp"

using namespace motifmap;

namespace {

CountSummary counts_for(const Sequence& seq, const std::vector<int>& widths,
                        const Alignment& align) {
  Dictionary dict;
  dict.alphabet = seq.alphabet;
  for (int w : widths) dict.motifs.push_back(uniform_pwm(seq.alphabet.size(), w));
  dict.rho = Vec::Constant(dict.size(), 1.0 / dict.size());
  return derive_counts(seq, dict, align);
}

Sequence random_sequence(int n, std::mt19937_64& rng) {
  std::string text;
  for (int i = 0; i < n; ++i) text.push_back("ACGT"[rng() % 4]);
  return sequence_from_string(dna_alphabet(), text);
}

}  // namespace

TEST_CASE("log_dirichlet_norm closed forms and symmetry") {
  Vec beta11(2);
  beta11 << 1.0, 1.0;
  CHECK(log_dirichlet_norm(beta11) == doctest::Approx(0.0).epsilon(1e-14));

  Vec beta21(2);
  beta21 << 2.0, 1.0;
  CHECK(log_dirichlet_norm(beta21) == doctest::Approx(std::log(0.5)).epsilon(1e-12));

  Vec v(3);
  v << 0.7, 1.3, 2.2;
  Vec permuted(3);
  permuted << 2.2, 0.7, 1.3;
  CHECK(log_dirichlet_norm(v) ==
        doctest::Approx(log_dirichlet_norm(permuted)).epsilon(1e-14));

  Vec bad(2);
  bad << 1.0, 0.0;
  CHECK_THROWS_AS(log_dirichlet_norm(bad), NonPositivePseudoCount);
}

TEST_CASE("log_dirichlet_norm matches high-precision quadrature") {
  Vec half(3);
  half << 0.5, 0.5, 0.5;
  CHECK(log_dirichlet_norm(half) ==
        doctest::Approx(oracles::dirichlet_norm_quadrature_3(half)).epsilon(1e-8));
  // also the known closed form log(2 pi)
  CHECK(log_dirichlet_norm(half) ==
        doctest::Approx(std::log(2.0 * M_PI)).epsilon(1e-12));

  Vec mixed(3);
  mixed << 1.5, 0.8, 2.0;
  CHECK(log_dirichlet_norm(mixed) ==
        doctest::Approx(oracles::dirichlet_norm_quadrature_3(mixed)).epsilon(1e-8));
}

TEST_CASE("logMAP is zero when the two models coincide") {
  std::mt19937_64 rng(3);
  auto seq = random_sequence(50, rng);
  auto counts = counts_for(seq, {}, Alignment{});
  PriorSpec priors = default_priors(4, 0);
  auto value = log_map(counts, priors);
  CHECK(value.log_map == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(value.motif_columns == 0.0);
}

TEST_CASE("empty-alignment logMAP matches the Polya-urn oracle") {
  std::mt19937_64 rng(5);
  auto seq = random_sequence(40, rng);
  auto counts = counts_for(seq, {3}, Alignment{});
  PriorSpec priors = default_priors(4, 1);
  priors.beta0 << 0.8, 1.2, 1.0, 1.5, 0.7;
  priors.alpha << 0.8, 1.2, 1.0, 1.5;

  // both marginals via the sequential predictive chain rule; the numerator
  // urn covers all five words with the motif category never drawn
  std::vector<int> draws(seq.data.begin(), seq.data.end());
  double numerator = oracles::polya_log_marginal(draws, priors.beta0);
  double denominator = oracles::polya_log_marginal(draws, priors.alpha);
  auto value = log_map(counts, priors);
  CHECK(value.log_map == doctest::Approx(numerator - denominator).epsilon(1e-10));
}

TEST_CASE("three components add up to logMAP") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    auto seq = random_sequence(30, rng);
    Alignment align;
    align.sites.push_back({static_cast<int>(rng() % 10), 0});
    align.sites.push_back({12 + static_cast<int>(rng() % 10), 0});
    auto counts = counts_for(seq, {3}, align);
    PriorSpec priors = default_priors(4, 1);
    auto value = log_map(counts, priors);
    CHECK(value.log_map ==
          doctest::Approx(value.word_usage + value.background +
                          value.motif_columns)
              .epsilon(1e-9));
  }
}

TEST_CASE("enumeration cap and trivial alignment sets") {
  auto seq = sequence_from_string(dna_alphabet(), "A");
  auto aligns = enumerate_alignments(seq, {2});
  REQUIRE(aligns.size() == 1);  // only the empty alignment fits
  CHECK(aligns[0].empty());

  std::mt19937_64 rng(9);
  auto big = random_sequence(200, rng);
  CHECK_THROWS_AS(enumerate_alignments(big, {3}, 1e6), InstanceTooLarge);
}

TEST_CASE("exact numerator with no widths is the null marginal under beta0") {
  std::mt19937_64 rng(11);
  auto seq = random_sequence(25, rng);
  PriorSpec priors = default_priors(4, 0);
  double numerator = exact_bayes_numerator(seq, priors, {});
  CHECK(numerator ==
        doctest::Approx(null_log_marginal(seq.letter_counts(), priors.beta0))
            .epsilon(1e-12));
}

TEST_CASE("exact numerator equals the logsumexp of per-alignment logMAP numerators") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    auto seq = random_sequence(8, rng);
    std::vector<int> widths{3};
    PriorSpec priors = default_priors(4, 1);
    double null_term = null_log_marginal(seq.letter_counts(), priors.alpha);
    double expected = -1e300;
    std::vector<double> terms;
    for (const auto& align : enumerate_alignments(seq, widths)) {
      auto counts = counts_for(seq, widths, align);
      terms.push_back(log_map(counts, priors).log_map + null_term);
      expected = std::max(expected, terms.back());
    }
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - expected);
    double reference = expected + std::log(acc);
    CHECK(exact_bayes_numerator(seq, priors, widths) ==
          doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("logMAP of any alignment is a lower bound on the Bayes factor") {
  // tiny planted instance: n = 12 with one width-3 site
  std::string text = "ACGTACGTACGT";
  auto seq = sequence_from_string(dna_alphabet(), text);
  std::vector<int> widths{3};
  PriorSpec priors = default_priors(4, 1);
  double bayes = exact_bayes_numerator(seq, priors, widths) -
                 null_log_marginal(seq.letter_counts(), priors.alpha);
  auto alignments = enumerate_alignments(seq, widths);
  REQUIRE(alignments.size() > 1);
  double best = -1e300;
  for (const auto& align : alignments) {
    double value = log_map(counts_for(seq, widths, align), priors).log_map;
    best = std::max(best, value);
    CHECK(value < bayes);  // strict: more than one alignment carries mass
  }
  CHECK(best < bayes);
}

TEST_CASE("mixture priors score as weighted probability-scale averages") {
  std::mt19937_64 rng(17);
  auto seq = random_sequence(30, rng);
  Alignment align;
  align.sites.push_back({4, 0});
  auto counts = counts_for(seq, {3}, align);

  PriorSpec a = default_priors(4, 1);
  PriorSpec b = default_priors(4, 1);
  b.gamma = Vec::Constant(4, 0.5);
  PriorSpec mix;
  mix.mixture.emplace_back(0.3, a);
  mix.mixture.emplace_back(0.7, b);

  double va = log_map(counts, a).log_map;
  double vb = log_map(counts, b).log_map;
  double expected = std::log(0.3 * std::exp(va) + 0.7 * std::exp(vb));
  auto got = log_map(counts, mix);
  CHECK(got.log_map == doctest::Approx(expected).epsilon(1e-10));
  CHECK(got.log_map ==
        doctest::Approx(got.word_usage + got.background + got.motif_columns)
            .epsilon(1e-9));
}

TEST_CASE("stirling approximation approaches the exact logMAP") {
  auto make_counts = [](int scale) {
    const int s = scale;
    CountSummary counts;
    counts.d = 4;
    counts.word_counts = VecI(5);
    counts.word_counts << 40 * s, 30 * s, 20 * s, 10 * s, 4 * s;
    MatI ck(4, 3);  // columns sum to the site count 4s, entries scale with s
    ck.col(0) << s, s, s, s;
    ck.col(1) << 2 * s, s, s / 2, s / 2;
    ck.col(2) << s / 2, 2 * s, s, s / 2;
    counts.column_counts.push_back(ck);
    return counts;
  };
  PriorSpec priors = default_priors(4, 1);

  auto c100 = make_counts(100);
  double exact100 = log_map(c100, priors).log_map;
  CHECK(std::abs(stirling_log_map(c100, priors) - exact100) < 0.05);

  auto c1000 = make_counts(1000);
  double exact1000 = log_map(c1000, priors).log_map;
  CHECK(std::abs(stirling_log_map(c1000, priors) - exact1000) < 0.005);

  // precondition boundary: counts of 2 evaluate without error
  CountSummary tiny;
  tiny.d = 4;
  tiny.word_counts = VecI::Constant(5, 2);
  tiny.column_counts.push_back(MatI::Constant(4, 2, 2));
  tiny.word_counts[4] = 8;
  CHECK(std::isfinite(stirling_log_map(tiny, priors)));

  CountSummary too_small = tiny;
  too_small.word_counts[1] = 1;
  CHECK_THROWS_AS(stirling_log_map(too_small, priors), CountsTooSmall);
}
