#ifndef MOTIFMAP_CORE_HPP
#define MOTIFMAP_CORE_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motifmap/errors.hpp"

namespace motifmap {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using VecI = Eigen::VectorXi;
using MatI = Eigen::MatrixXi;

// Finite alphabet of d distinct letters. The d single letters double as the
// first d words of every dictionary.
struct Alphabet {
  std::string letters;

  int size() const { return static_cast<int>(letters.size()); }
  char letter(int i) const { return letters.at(static_cast<size_t>(i)); }
  // -1 when the character is not part of the alphabet.
  int index_of(char c) const;
  void validate() const;
};

Alphabet dna_alphabet();

// Letter-index sequence. Multiple input records are concatenated; words may
// not straddle a record boundary, so the start offset of every record is kept.
struct Sequence {
  Alphabet alphabet;
  std::vector<std::uint8_t> data;
  std::vector<int> record_starts{0};  // sorted, first element always 0

  int size() const { return static_cast<int>(data.size()); }
  // Start offset of the record containing position pos.
  int record_start_of(int pos) const;
  // True when [pos, pos + width) lies inside a single record.
  bool fits_in_record(int pos, int width) const;
  VecI letter_counts() const;
  std::string to_string() const;
  void validate() const;
};

Sequence sequence_from_string(const Alphabet& alphabet, const std::string& s);

// Position weight matrix: column j holds the letter distribution of motif
// position j, so the matrix is d x w.
struct Pwm {
  Mat columns;

  int width() const { return static_cast<int>(columns.cols()); }
  int depth() const { return static_cast<int>(columns.rows()); }
  void validate() const;
};

Pwm uniform_pwm(int d, int width);
// Point-mass PWM on the given letter-index string.
Pwm exact_pwm(int d, const std::vector<int>& letter_indices);

// Per-column argmax letters; ties resolved toward the lowest letter index.
std::string consensus(const Pwm& pwm, const Alphabet& alphabet);

// Stochastic dictionary: d single-letter words followed by the motifs,
// with word usage probabilities rho of length D = d + motifs.size().
struct Dictionary {
  Alphabet alphabet;
  std::vector<Pwm> motifs;
  Vec rho;

  int d() const { return alphabet.size(); }
  int size() const { return d() + static_cast<int>(motifs.size()); }
  int motif_width(int k) const { return motifs.at(static_cast<size_t>(k)).width(); }
  void validate() const;
};

Dictionary letters_only_dictionary(const Alphabet& alphabet, const Vec& rho);

// One typed motif occurrence: site starts at pos and spans the motif's width.
struct Site {
  int pos = 0;
  int motif = 0;  // index into Dictionary::motifs

  friend bool operator==(const Site&, const Site&) = default;
};

// The motif site indicator set; sites are kept sorted by position and their
// occupied intervals must be disjoint.
struct Alignment {
  std::vector<Site> sites;

  bool empty() const { return sites.empty(); }
  void sort_sites();

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

// Indicator representation: per position, the motif index starting there,
// or -1. Round-trips with Alignment.
std::vector<int> alignment_to_indicators(const Alignment& align, int n);
Alignment indicators_to_alignment(const std::vector<int>& indicators);

// Word counts and per-motif column counts derived from (sequence, alignment).
struct CountSummary {
  int d = 0;
  // Length D; letters first (background single-letter words), then one slot
  // per motif holding its number of sites.
  VecI word_counts;
  // Per motif k, a d x w_k matrix of aligned column letter counts.
  std::vector<MatI> column_counts;

  int num_motifs() const { return static_cast<int>(column_counts.size()); }
  // Letter counts outside all sites (the first d word counts).
  VecI background_letter_counts() const { return word_counts.head(d); }
  // Raw letter tallies of the sequence: background plus motif columns.
  VecI total_letter_counts() const;
  // Sum of all motif column count vectors (the "c" vector of the MAP score).
  VecI motif_letter_counts() const;
  void validate() const;
};

CountSummary derive_counts(const Sequence& seq, const Dictionary& dict,
                           const Alignment& align);

// Dirichlet pseudo-counts for the model pair: beta0 for word usage under the
// motif model (length D), alpha for the null model (length d), gamma shared
// across motif columns (length d). A non-empty mixture makes this a
// mixture-of-Dirichlet prior; components are complete PriorSpecs.
struct PriorSpec {
  Vec beta0;
  Vec alpha;
  Vec gamma;
  std::vector<std::pair<double, PriorSpec>> mixture;

  bool is_mixture() const { return !mixture.empty(); }
  void validate() const;
};

// beta0 = 1 for every word, alpha = beta0 restricted to the letters, and
// gamma with equal components summing to one.
PriorSpec default_priors(int d, int num_motifs);

}  // namespace motifmap

#endif
