#ifndef MOTIFMAP_RANDOM_HPP
#define MOTIFMAP_RANDOM_HPP

#include <random>

#include "motifmap/core.hpp"

namespace motifmap {

using Rng = std::mt19937_64;

// Dirichlet draw via normalized gamma variates.
inline Vec sample_dirichlet(Rng& rng, const Eigen::Ref<const Vec>& alpha) {
  Vec draw(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) {
    std::gamma_distribution<double> gamma(alpha[i], 1.0);
    draw[i] = gamma(rng);
  }
  double total = draw.sum();
  if (total <= 0.0) {
    // all-zero draws only happen for extreme pseudo-counts; fall back to the
    // mean rather than emit NaNs
    return alpha / alpha.sum();
  }
  return draw / total;
}

inline int sample_categorical(Rng& rng, const Eigen::Ref<const Vec>& probs) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng) * probs.sum();
  double cum = 0.0;
  for (int i = 0; i < probs.size(); ++i) {
    cum += probs[i];
    if (u <= cum) return i;
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace motifmap

#endif
