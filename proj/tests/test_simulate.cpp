#include <doctest.h>

#include <cmath>

#include "motifmap/core.hpp"
#include "motifmap/simulate.hpp"

using namespace motifmap;

TEST_CASE("consensus realization by largest remainder") {
  Vec quarter = Vec::Constant(4, 0.25);
  auto letters = consensus_for_composition(quarter, 8);
  VecI tally = VecI::Zero(4);
  for (int l : letters) tally[l] += 1;
  CHECK(tally == VecI::Constant(4, 2));

  // w = 10 cannot realize 2.5 copies each; ties go to the lowest letters
  letters = consensus_for_composition(quarter, 10);
  tally.setZero();
  for (int l : letters) tally[l] += 1;
  CHECK(tally[0] == 3);
  CHECK(tally[1] == 3);
  CHECK(tally[2] == 2);
  CHECK(tally[3] == 2);

  Vec skewed(4);
  skewed << 0.6, 0.3, 0.1, 0.0;
  letters = consensus_for_composition(skewed, 10);
  tally.setZero();
  for (int l : letters) tally[l] += 1;
  CHECK(tally[0] == 6);
  CHECK(tally[1] == 3);
  CHECK(tally[2] == 1);
  CHECK(tally[3] == 0);
}

TEST_CASE("c = 0 gives a pure i.i.d. sequence with empty truth") {
  auto sim = generate(500, Vec::Constant(4, 0.25), {}, 11);
  CHECK(sim.seq.size() == 500);
  CHECK(sim.truth.empty());
}

TEST_CASE("exact planting yields the advertised site and letter tallies") {
  PlantedMotif motif;
  motif.width = 10;
  motif.proportion = 0.02;
  motif.composition = Vec::Constant(4, 0.25);
  motif.exact = true;
  const int n = 10000;
  auto sim = generate(n, Vec::Constant(4, 0.25), {motif}, 5);
  CHECK(static_cast<int>(sim.truth.sites.size()) == 200);

  // N0 - N1 = per-letter consensus copies times site count
  VecI consensus_tally = VecI::Zero(4);
  auto letters = consensus_for_composition(motif.composition, motif.width);
  for (int l : letters) consensus_tally[l] += 1;

  VecI total = sim.seq.letter_counts();
  VecI background = total;
  for (const auto& site : sim.truth.sites)
    for (int j = 0; j < motif.width; ++j)
      background[sim.seq.data[static_cast<size_t>(site.pos + j)]] -= 1;
  CHECK((total - background) == consensus_tally * 200);

  // sites are valid and non-overlapping by construction
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& site : sim.truth.sites)
    for (int j = 0; j < motif.width; ++j) {
      CHECK(seen[static_cast<size_t>(site.pos + j)] == 0);
      seen[static_cast<size_t>(site.pos + j)] = 1;
    }
}

TEST_CASE("two motif types get disjoint truth sets with correct counts") {
  PlantedMotif a;
  a.width = 8;
  a.proportion = 0.004;
  a.composition = Vec::Constant(4, 0.25);
  a.exact = true;
  PlantedMotif b;
  b.width = 12;
  b.proportion = 0.003;
  Vec comp(4);
  comp << 0.5, 0.2, 0.2, 0.1;
  b.composition = comp;
  b.exact = true;
  const int n = 20000;
  auto sim = generate(n, Vec::Constant(4, 0.25), {a, b}, 123);
  int count_a = 0, count_b = 0;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& site : sim.truth.sites) {
    int w = site.motif == 0 ? 8 : 12;
    (site.motif == 0 ? count_a : count_b) += 1;
    for (int j = 0; j < w; ++j) {
      CHECK(seen[static_cast<size_t>(site.pos + j)] == 0);
      seen[static_cast<size_t>(site.pos + j)] = 1;
    }
  }
  CHECK(count_a == 80);
  CHECK(count_b == 60);
}

TEST_CASE("background frequencies converge to theta0") {
  Vec theta0(4);
  theta0 << 0.4, 0.3, 0.2, 0.1;
  const int n = 100000;
  auto sim = generate(n, theta0, {}, 321);
  VecI counts = sim.seq.letter_counts();
  for (int i = 0; i < 4; ++i) {
    double se = std::sqrt(n * theta0[i] * (1.0 - theta0[i]));
    CHECK(std::abs(counts[i] - theta0[i] * n) <= 3.0 * se);
  }
}

TEST_CASE("generation is deterministic per seed") {
  PlantedMotif motif;
  motif.width = 6;
  motif.proportion = 0.01;
  motif.composition = Vec::Constant(4, 0.25);
  auto a = generate(2000, Vec::Constant(4, 0.25), {motif}, 9);
  auto b = generate(2000, Vec::Constant(4, 0.25), {motif}, 9);
  CHECK(a.seq.data == b.seq.data);
  CHECK(a.truth == b.truth);
}

TEST_CASE("infeasible placements are refused") {
  PlantedMotif wide;
  wide.width = 50;
  wide.proportion = 0.019;  // c * w = 0.95: occupancy too dense to place
  wide.composition = Vec::Constant(4, 0.25);
  wide.exact = true;
  CHECK_THROWS_AS(generate(1000, Vec::Constant(4, 0.25), {wide}, 1),
                  InfeasiblePlacement);
  PlantedMotif impossible;
  impossible.width = 1500;  // wider than the sequence
  impossible.proportion = 0.0005;
  impossible.composition = Vec::Constant(4, 0.25);
  CHECK_THROWS_AS(generate(1000, Vec::Constant(4, 0.25), {impossible}, 1),
                  InfeasiblePlacement);
}
