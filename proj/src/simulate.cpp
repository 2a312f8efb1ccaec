#include "motifmap/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "motifmap/random.hpp"

namespace motifmap {

std::vector<int> consensus_for_composition(const Eigen::Ref<const Vec>& k, int w) {
  const int d = static_cast<int>(k.size());
  if (d < 2) throw InvalidArgument("composition needs at least 2 letters");
  if ((k.array() < 0.0).any() || std::abs(k.sum() - 1.0) > 1e-9)
    throw InvalidArgument("composition must be a probability vector");

  std::vector<int> copies(static_cast<size_t>(d));
  std::vector<std::pair<double, int>> fractional;
  int assigned = 0;
  for (int i = 0; i < d; ++i) {
    double ideal = k[i] * w;
    copies[static_cast<size_t>(i)] = static_cast<int>(std::floor(ideal));
    assigned += copies[static_cast<size_t>(i)];
    fractional.emplace_back(ideal - std::floor(ideal), i);
  }
  // remainder by largest fractional part, ties toward the lowest letter index
  std::sort(fractional.begin(), fractional.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (int r = 0; r < w - assigned; ++r)
    copies[static_cast<size_t>(fractional[static_cast<size_t>(r)].second)] += 1;

  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(w));
  for (int i = 0; i < d; ++i)
    letters.insert(letters.end(), static_cast<size_t>(copies[static_cast<size_t>(i)]), i);
  return letters;
}

Simulated generate(int n, const Eigen::Ref<const Vec>& theta0,
                   const std::vector<PlantedMotif>& motifs, std::uint64_t seed,
                   const Alphabet& alphabet) {
  const int d = alphabet.size();
  if (n < 0) throw InvalidArgument("sequence length must be nonnegative");
  if (theta0.size() != d || (theta0.array() < 0.0).any() ||
      std::abs(theta0.sum() - 1.0) > 1e-9)
    throw InvalidArgument("theta0 must be a probability vector of length d");
  double occupancy = 0.0;
  for (const auto& m : motifs) {
    if (m.width < 1) throw InvalidArgument("motif width must be positive");
    if (m.proportion < 0.0) throw InvalidArgument("motif proportion must be nonnegative");
    occupancy += m.proportion * m.width;
  }
  if (occupancy >= 1.0) throw InvalidArgument("motif occupancy c*w must sum below 1");

  Rng rng(seed);
  Simulated out;
  out.seq.alphabet = alphabet;
  out.seq.data.assign(static_cast<size_t>(n), 0);

  // background letters
  for (int pos = 0; pos < n; ++pos)
    out.seq.data[static_cast<size_t>(pos)] =
        static_cast<std::uint8_t>(sample_categorical(rng, theta0));

  // realize the PWM of each motif type
  std::vector<std::vector<int>> consensus_letters(motifs.size());
  for (size_t k = 0; k < motifs.size(); ++k) {
    const auto& m = motifs[k];
    if (m.exact) {
      if (m.pwm) {
        // keep the PWM's column order: per-column argmax
        if (m.pwm->width() != m.width || m.pwm->depth() != d)
          throw DimensionMismatch("pwm shape disagrees with motif spec");
        for (int j = 0; j < m.width; ++j) {
          int best = 0;
          for (int i = 1; i < d; ++i)
            if (m.pwm->columns(i, j) > m.pwm->columns(best, j)) best = i;
          consensus_letters[k].push_back(best);
        }
      } else {
        consensus_letters[k] = consensus_for_composition(m.composition, m.width);
      }
      out.motifs.push_back(exact_pwm(d, consensus_letters[k]));
    } else if (m.pwm) {
      if (m.pwm->width() != m.width || m.pwm->depth() != d)
        throw DimensionMismatch("pwm shape disagrees with motif spec");
      out.motifs.push_back(*m.pwm);
    } else {
      // composition without exact: i.i.d. columns with distribution k
      Pwm pwm;
      pwm.columns = m.composition.replicate(1, m.width);
      pwm.validate();
      out.motifs.push_back(pwm);
    }
  }

  // uniform rejection placement of all sites
  std::vector<char> occupied(static_cast<size_t>(n), 0);
  std::uniform_int_distribution<int> any_pos(0, std::max(0, n - 1));
  for (size_t k = 0; k < motifs.size(); ++k) {
    const auto& m = motifs[k];
    const int w = m.width;
    const int sites_wanted = static_cast<int>(std::lround(m.proportion * n));
    if (sites_wanted > 0 && w > n)
      throw InfeasiblePlacement("motif wider than sequence");
    long retries_left = 100L * std::max(1, sites_wanted);
    int placed = 0;
    while (placed < sites_wanted) {
      if (retries_left-- <= 0)
        throw InfeasiblePlacement("could not place all sites within retry cap");
      int pos = any_pos(rng);
      if (pos + w > n) continue;
      bool clash = false;
      for (int j = 0; j < w && !clash; ++j)
        clash = occupied[static_cast<size_t>(pos + j)] != 0;
      if (clash) continue;
      for (int j = 0; j < w; ++j) occupied[static_cast<size_t>(pos + j)] = 1;
      out.truth.sites.push_back({pos, static_cast<int>(k)});
      ++placed;
    }
  }
  out.truth.sort_sites();

  // write site letters
  for (const auto& site : out.truth.sites) {
    const auto& m = motifs[static_cast<size_t>(site.motif)];
    for (int j = 0; j < m.width; ++j) {
      int letter;
      if (m.exact) {
        letter = consensus_letters[static_cast<size_t>(site.motif)][static_cast<size_t>(j)];
      } else {
        letter = sample_categorical(
            rng, out.motifs[static_cast<size_t>(site.motif)].columns.col(j));
      }
      out.seq.data[static_cast<size_t>(site.pos + j)] = static_cast<std::uint8_t>(letter);
    }
  }
  return out;
}

}  // namespace motifmap
