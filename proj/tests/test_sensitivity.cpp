#include <doctest.h>

#include <cmath>

#include "motifmap/map_score.hpp"
#include "motifmap/random.hpp"
#include "motifmap/sensitivity.hpp"
#include "oracles.hpp"

using namespace motifmap;

namespace {

Mat small_count_matrix() {
  Mat counts(4, 3);
  counts << 2, 0, 1,
            1, 3, 0,
            0, 1, 2,
            2, 1, 2;
  return counts;
}

// CountSummary for a single-motif model with every entry in the Stirling
// regime; letters then one motif of width w.
CountSummary stirling_counts(int scale, int w) {
  CountSummary counts;
  counts.d = 4;
  counts.word_counts = VecI(5);
  counts.word_counts << 120 * scale, 90 * scale, 60 * scale, 50 * scale,
      20 * scale;
  MatI ck(4, w);
  for (int j = 0; j < w; ++j) {
    ck.col(j) << 10 * scale, 4 * scale, 3 * scale, 3 * scale;
    if (j % 2 == 1) ck.col(j) << 3 * scale, 3 * scale, 4 * scale, 10 * scale;
  }
  counts.column_counts.push_back(ck);
  return counts;
}

}  // namespace

TEST_CASE("lambda weight limits and direct-arithmetic agreement") {
  CHECK(lambda_weight(0.0, -5.0, -7.0) == 1.0);
  CHECK(lambda_weight(0.3, -5.0, -5.0) == doctest::Approx(0.7).epsilon(1e-12));

  Rng rng(61);
  std::uniform_real_distribution<double> unif(-30.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    double eps = 0.05 + 0.9 * (trial % 10) / 10.0;
    double lm0 = unif(rng), lmq = unif(rng);
    double direct = (1.0 - eps) * std::exp(lm0) /
                    ((1.0 - eps) * std::exp(lm0) + eps * std::exp(lmq));
    double got = lambda_weight(eps, lm0, lmq);
    CHECK(got == doctest::Approx(direct).epsilon(1e-12));
    CHECK(got > 0.0);
    CHECK(got < 1.0);
  }
}

TEST_CASE("contaminated MAP endpoints and probability-scale linearity") {
  double a = -12.5, b = -15.25;
  CHECK(contaminated_map(0.0, a, b) == a);
  CHECK(contaminated_map(1.0, a, b) == b);
  double mid = contaminated_map(0.5, a, b);
  CHECK(mid ==
        doctest::Approx(std::log(0.5 * (std::exp(a) + std::exp(b)))).epsilon(1e-12));

  // three-point collinearity on the probability scale
  for (double eps : {0.25, 0.5, 0.75}) {
    double value = contaminated_map(eps, a, b);
    double expected = (1.0 - eps) * std::exp(a) + eps * std::exp(b);
    CHECK(std::abs(std::exp(value) / expected - 1.0) < 1e-12);
  }
}

TEST_CASE("contamination spec scores a prior pair on shared counts") {
  CountSummary counts = stirling_counts(1, 4);
  ContaminationSpec spec;
  spec.epsilon = 0.3;
  spec.base = default_priors(4, 1);
  spec.contaminant = default_priors(4, 1);
  spec.contaminant.gamma = DeltaGrid::delta_vector(0.1);
  double got = contaminated_map(spec, counts);
  double expected =
      contaminated_map(0.3, log_map(counts, spec.base).log_map,
                       log_map(counts, spec.contaminant).log_map);
  CHECK(got == doctest::Approx(expected).epsilon(1e-14));

  spec.epsilon = 1.5;
  CHECK_THROWS_AS(contaminated_map(spec, counts), InvalidArgument);
}

TEST_CASE("contaminated posterior mean endpoints and collapse") {
  Mat counts = small_count_matrix();
  Vec gamma = Vec::Constant(4, 0.25);
  Vec delta = DeltaGrid::delta_vector(0.2);

  Mat at_zero = contaminated_posterior_mean(counts, gamma, delta, 0.0);
  for (int j = 0; j < counts.cols(); ++j) {
    Vec expected = counts.col(j) + gamma;
    expected /= expected.sum();
    CHECK((at_zero.col(j) - expected).lpNorm<Eigen::Infinity>() < 1e-12);
  }
  Mat at_one = contaminated_posterior_mean(counts, gamma, delta, 1.0);
  for (int j = 0; j < counts.cols(); ++j) {
    Vec expected = counts.col(j) + delta;
    expected /= expected.sum();
    CHECK((at_one.col(j) - expected).lpNorm<Eigen::Infinity>() < 1e-12);
  }
  for (double eps : {0.1, 0.5, 0.9}) {
    Mat collapsed = contaminated_posterior_mean(counts, gamma, gamma, eps);
    CHECK((collapsed - at_zero).lpNorm<Eigen::Infinity>() < 1e-12);
  }

  Vec bad = Vec::Constant(4, 0.5);
  CHECK_THROWS_AS(contaminated_posterior_mean(counts, gamma, bad, 0.3),
                  PseudoCountSumNotOne);
}

TEST_CASE("contaminated posterior mean matches a Monte Carlo oracle") {
  Mat counts = small_count_matrix();
  Vec gamma(4), delta(4);
  gamma << 0.4, 0.2, 0.2, 0.2;
  delta << 0.1, 0.4, 0.4, 0.1;
  const double eps = 0.35;
  Mat got = contaminated_posterior_mean(counts, gamma, delta, eps);

  // self-normalized importance sampling from the two-component mixture prior
  Rng rng(171);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int batches = 10, per_batch = 100000;
  std::vector<Mat> batch_means;
  for (int batch = 0; batch < batches; ++batch) {
    Mat weighted = Mat::Zero(4, counts.cols());
    double weight_sum = 0.0;
    for (int s = 0; s < per_batch; ++s) {
      const Vec& prior = unif(rng) < eps ? delta : gamma;
      Mat theta(4, counts.cols());
      double log_weight = 0.0;
      for (int j = 0; j < counts.cols(); ++j) {
        theta.col(j) = sample_dirichlet(rng, prior);
        for (int i = 0; i < 4; ++i)
          if (counts(i, j) > 0)
            log_weight += counts(i, j) * std::log(theta(i, j));
      }
      double weight = std::exp(log_weight);
      weighted += weight * theta;
      weight_sum += weight;
    }
    batch_means.push_back(weighted / weight_sum);
  }
  Mat mean = Mat::Zero(4, counts.cols());
  for (const auto& m : batch_means) mean += m;
  mean /= batches;
  for (int j = 0; j < counts.cols(); ++j)
    for (int i = 0; i < 4; ++i) {
      double var = 0.0;
      for (const auto& m : batch_means)
        var += (m(i, j) - mean(i, j)) * (m(i, j) - mean(i, j));
      double se = std::sqrt(var / (batches - 1) / batches);
      CHECK(std::abs(got(i, j) - mean(i, j)) <= 3.0 * se + 1e-6);
    }
}

TEST_CASE("delta grid: singleton grid, conserved counts, prior comparison") {
  DeltaGrid singleton;
  singleton.delta_star = {0.5};
  Mat counts = small_count_matrix();
  auto report =
      delta_grid_profile(counts, ColumnPrior::single(Vec::Constant(4, 0.25)),
                         singleton, 0.4);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].d_m == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(report.rows[0].d_k == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(report.log_map_min == report.log_map_max);

  // strongly conserved counts move theta* by less than 1e-3 across the grid
  Mat conserved = Mat::Zero(4, 6);
  for (int j = 0; j < 6; ++j) {
    conserved(j % 4, j) = 70;
    conserved((j + 1) % 4, j) = 5;
  }
  auto strong = delta_grid_profile(
      conserved, ColumnPrior::single(Vec::Constant(4, 0.25)),
      DeltaGrid::uniform(99), 0.5);
  for (const auto& row : strong.rows) {
    CHECK(row.d_m < 1e-3);
    CHECK(row.d_m >= 0.0);
    CHECK(row.d_e >= 0.0);
  }
}

TEST_CASE("mixture base prior shrinks the logMAP range on skewed motifs") {
  // exact GC-heavy motif counts (consensus ACCCGGGT), far from uniform
  const int sites = 40;
  const std::vector<int> consensus = {0, 1, 1, 1, 2, 2, 2, 3};
  Mat counts = Mat::Zero(4, 8);
  for (int j = 0; j < 8; ++j)
    counts(consensus[static_cast<size_t>(j)], j) = sites;
  ColumnPrior equal = ColumnPrior::single(Vec::Constant(4, 0.25));
  ColumnPrior mix3;
  Vec at(4), gc(4);
  at << 0.35, 0.15, 0.15, 0.35;
  gc << 0.15, 0.35, 0.35, 0.15;
  mix3.components.emplace_back(1.0 / 3, at);
  mix3.components.emplace_back(1.0 / 3, gc);
  mix3.components.emplace_back(1.0 / 3, Vec::Constant(4, 0.25));

  DeltaGrid grid = DeltaGrid::uniform(49);
  for (double eps : {0.1, 0.5, 0.9}) {
    auto equal_report = delta_grid_profile(counts, equal, grid, eps);
    auto mix_report = delta_grid_profile(counts, mix3, grid, eps);
    CHECK(mix_report.log_map_max - mix_report.log_map_min <
          equal_report.log_map_max - equal_report.log_map_min);
  }
}

TEST_CASE("posterior-mean derivative: closed form, finite differences, bound") {
  // all counts zero, uniform beta: diagonal = (D-1)/D / sum(beta)
  Vec zero_counts = Vec::Zero(5);
  Vec beta = Vec::Constant(5, 0.8);
  double expected = (5.0 - 1.0) / 5.0 / beta.sum();
  CHECK(dmu_dbeta(zero_counts, beta, 2, 2) ==
        doctest::Approx(expected).epsilon(1e-12));

  Rng rng(91);
  std::uniform_real_distribution<double> unif(0.1, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    Vec counts(5), b(5);
    for (int i = 0; i < 5; ++i) {
      counts[i] = static_cast<double>(rng() % 50);
      b[i] = unif(rng);
    }
    int j = static_cast<int>(rng() % 5), i = static_cast<int>(rng() % 5);
    double got = dmu_dbeta(counts, b, j, i);
    CHECK(std::abs(got) <= 1.0);
    auto mu = [&](double x) {
      Vec bx = b;
      bx[i] = x;
      Vec post = counts + bx;
      return post[j] / post.sum();
    };
    double fd = oracles::central_difference(mu, b[i], 1e-6);
    CHECK(std::abs(got - fd) < 1e-6);
  }
}

TEST_CASE("gamma derivative matches finite differences of the exact logMAP") {
  CountSummary counts = stirling_counts(7, 6);  // column entries >= 21
  Vec gamma = Vec::Constant(4, 4.0);
  Mat ck = counts.column_counts[0].cast<double>();
  for (int j = 0; j < 4; ++j) {
    double got = dlogmap_dgamma(ck, gamma, j);
    auto exact = [&](double x) {
      PriorSpec priors = default_priors(4, 1);
      priors.gamma = gamma;
      priors.gamma[j] = x;
      return log_map(counts, priors).log_map;
    };
    double fd = oracles::central_difference(exact, gamma[j], 1e-5);
    CHECK(std::abs(got - fd) / std::abs(fd) < 0.05);
  }
}

TEST_CASE("small gamma components blow the derivative up") {
  Mat ck = stirling_counts(2, 6).column_counts[0].cast<double>();
  double at_equal =
      std::abs(dlogmap_dgamma(ck, Vec::Constant(4, 0.25), 0));
  Vec tiny(4);
  tiny << 0.01, 0.33, 0.33, 0.33;
  CHECK(dlogmap_dgamma(ck, tiny, 0) > at_equal);
  Vec tinier(4);
  tinier << 0.001, 0.333, 0.333, 0.333;
  CHECK(dlogmap_dgamma(ck, tinier, 0) > dlogmap_dgamma(ck, tiny, 0));

  // with sum(gamma) = 1 fixed, equal components give the smallest worst-case
  // derivative magnitude on average over exchangeable count matrices
  Rng rng(121);
  auto max_abs = [](const Mat& m, const Vec& g) {
    double worst = 0.0;
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(dlogmap_dgamma(m, g, j)));
    return worst;
  };
  std::vector<Vec> skewed;
  for (int hot = 0; hot < 4; ++hot) {
    Vec g = Vec::Constant(4, 0.3);
    g[hot] = 0.1;
    skewed.push_back(g);
    Vec h = Vec::Constant(4, 0.2);
    h[hot] = 0.4;
    skewed.push_back(h);
  }
  double equal_mean = 0.0;
  std::vector<double> skewed_means(skewed.size(), 0.0);
  const int matrices = 40;
  for (int trial = 0; trial < matrices; ++trial) {
    Mat m = Mat::Zero(4, 6);
    for (int j = 0; j < 6; ++j)
      for (int s = 0; s < 40; ++s)
        m(static_cast<int>(rng() % 4), j) += 1.0;
    equal_mean += max_abs(m, Vec::Constant(4, 0.25));
    for (size_t g = 0; g < skewed.size(); ++g)
      skewed_means[g] += max_abs(m, skewed[g]);
  }
  for (double other : skewed_means) CHECK(equal_mean < other);
}

TEST_CASE("beta derivative matches finite differences and flags regimes") {
  CountSummary counts = stirling_counts(7, 6);
  Vec beta = Vec::Ones(5);
  beta[4] = 3.0;

  for (int k : {0, 1, 2, 3, 4}) {
    double got = dlogmap_dbeta(counts, beta, k);
    auto exact = [&](double x) {
      PriorSpec priors = default_priors(4, 1);
      priors.beta0 = beta;
      priors.beta0[k] = x;
      priors.alpha = priors.beta0.head(4);  // alpha tied to the letter part
      return log_map(counts, priors).log_map;
    };
    double fd = oracles::central_difference(exact, beta[k], 1e-5);
    CHECK(std::abs(got - fd) / std::abs(fd) < 0.05);
    if (k < 4) CHECK(std::abs(got) < 1.0);  // negligible letter influence
  }

  // beta_D influence grows without bound as beta_D shrinks
  double prev = 0.0;
  for (double bd : {0.5, 0.05, 0.005}) {
    Vec b = beta;
    b[4] = bd;
    double magnitude = std::abs(dlogmap_dbeta(counts, b, 4));
    CHECK(magnitude > prev);
    prev = magnitude;
    CHECK(robust_beta_regime(b));
  }
  Vec dominated = Vec::Ones(5);
  dominated[4] = 10.0;
  CHECK_FALSE(robust_beta_regime(dominated));

  CountSummary two_motifs = counts;
  two_motifs.word_counts = VecI::Constant(6, 10);
  two_motifs.column_counts.push_back(MatI::Constant(4, 2, 5));
  CHECK_THROWS_AS(dlogmap_dbeta(two_motifs, Vec::Ones(6), 0),
                  MultiMotifUnsupported);
}
