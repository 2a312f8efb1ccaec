#ifndef MOTIFMAP_SIMULATE_HPP
#define MOTIFMAP_SIMULATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifmap/core.hpp"

namespace motifmap {

// One planted motif type: either an explicit PWM sampled per column, or a
// composition vector; with exact set, every instance is the fixed consensus
// realizing that composition.
struct PlantedMotif {
  int width = 0;
  double proportion = 0.0;  // sites per unit length
  Vec composition;          // length d; ignored when pwm is set
  std::optional<Pwm> pwm;
  bool exact = false;
};

struct Simulated {
  Sequence seq;
  Alignment truth;
  std::vector<Pwm> motifs;  // the PWMs actually planted (exact ones are point masses)
};

// Letter-index consensus realizing composition k at width w: round(k_i w)
// copies of letter i, remainder assigned by largest fractional part.
std::vector<int> consensus_for_composition(const Eigen::Ref<const Vec>& k, int w);

// Background letters i.i.d. from theta0 with round(c * n) non-overlapping
// sites per motif placed uniformly at random. Deterministic per seed.
Simulated generate(int n, const Eigen::Ref<const Vec>& theta0,
                   const std::vector<PlantedMotif>& motifs, std::uint64_t seed,
                   const Alphabet& alphabet = dna_alphabet());

}  // namespace motifmap

#endif
