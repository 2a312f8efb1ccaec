#include "motifmap/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

namespace motifmap {

namespace {
constexpr double kSimplexTol = 1e-9;
}

int Alphabet::index_of(char c) const {
  auto pos = letters.find(c);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

void Alphabet::validate() const {
  if (size() < 2) throw InvalidArgument("alphabet needs at least 2 letters");
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (letters[i] == letters[j])
        throw InvalidArgument("alphabet letters must be distinct");
}

Alphabet dna_alphabet() { return Alphabet{"ACGT"}; }

int Sequence::record_start_of(int pos) const {
  auto it = std::upper_bound(record_starts.begin(), record_starts.end(), pos);
  return *(it - 1);
}

bool Sequence::fits_in_record(int pos, int width) const {
  if (pos < 0 || width < 1 || pos + width > size()) return false;
  return record_start_of(pos) == record_start_of(pos + width - 1);
}

VecI Sequence::letter_counts() const {
  VecI counts = VecI::Zero(alphabet.size());
  for (auto x : data) counts[x] += 1;
  return counts;
}

std::string Sequence::to_string() const {
  std::string out;
  out.reserve(data.size());
  for (auto x : data) out.push_back(alphabet.letter(x));
  return out;
}

void Sequence::validate() const {
  alphabet.validate();
  for (auto x : data)
    if (x >= alphabet.size()) throw InvalidArgument("letter index out of range");
  if (record_starts.empty() || record_starts.front() != 0)
    throw InvalidArgument("record_starts must begin with 0");
  if (!std::is_sorted(record_starts.begin(), record_starts.end()))
    throw InvalidArgument("record_starts must be sorted");
  if (!record_starts.empty() && record_starts.back() > size())
    throw InvalidArgument("record start beyond sequence end");
}

Sequence sequence_from_string(const Alphabet& alphabet, const std::string& s) {
  Sequence seq;
  seq.alphabet = alphabet;
  seq.data.reserve(s.size());
  for (char c : s) {
    int idx = alphabet.index_of(static_cast<char>(std::toupper(c)));
    if (idx < 0)
      throw ParseError(std::string("letter '") + c + "' not in alphabet");
    seq.data.push_back(static_cast<std::uint8_t>(idx));
  }
  return seq;
}

void Pwm::validate() const {
  if (width() < 1) throw InvalidArgument("pwm must have at least one column");
  for (int j = 0; j < width(); ++j) {
    const auto col = columns.col(j);
    if ((col.array() < -kSimplexTol).any() || (col.array() > 1.0 + kSimplexTol).any())
      throw InvalidArgument("pwm entries must lie in [0,1]");
    if (std::abs(col.sum() - 1.0) > kSimplexTol)
      throw InvalidArgument("pwm column does not sum to 1");
  }
}

Pwm uniform_pwm(int d, int width) {
  Pwm pwm;
  pwm.columns = Mat::Constant(d, width, 1.0 / d);
  return pwm;
}

Pwm exact_pwm(int d, const std::vector<int>& letter_indices) {
  Pwm pwm;
  pwm.columns = Mat::Zero(d, static_cast<int>(letter_indices.size()));
  for (int j = 0; j < static_cast<int>(letter_indices.size()); ++j) {
    int i = letter_indices[static_cast<size_t>(j)];
    if (i < 0 || i >= d) throw InvalidArgument("letter index out of range");
    pwm.columns(i, j) = 1.0;
  }
  return pwm;
}

std::string consensus(const Pwm& pwm, const Alphabet& alphabet) {
  if (pwm.depth() != alphabet.size())
    throw DimensionMismatch("pwm depth does not match alphabet");
  std::string out;
  out.reserve(static_cast<size_t>(pwm.width()));
  for (int j = 0; j < pwm.width(); ++j) {
    int best = 0;
    for (int i = 1; i < pwm.depth(); ++i)
      if (pwm.columns(i, j) > pwm.columns(best, j)) best = i;
    out.push_back(alphabet.letter(best));
  }
  return out;
}

void Dictionary::validate() const {
  alphabet.validate();
  if (rho.size() != size()) throw DimensionMismatch("rho length must equal D");
  if ((rho.array() < -kSimplexTol).any())
    throw InvalidArgument("rho entries must be nonnegative");
  if (std::abs(rho.sum() - 1.0) > kSimplexTol)
    throw InvalidArgument("rho does not sum to 1");
  for (const auto& m : motifs) {
    m.validate();
    if (m.depth() != d()) throw DimensionMismatch("pwm depth does not match alphabet");
  }
}

Dictionary letters_only_dictionary(const Alphabet& alphabet, const Vec& rho) {
  Dictionary dict;
  dict.alphabet = alphabet;
  dict.rho = rho;
  dict.validate();
  return dict;
}

void Alignment::sort_sites() {
  std::sort(sites.begin(), sites.end(),
            [](const Site& a, const Site& b) { return a.pos < b.pos; });
}

std::vector<int> alignment_to_indicators(const Alignment& align, int n) {
  std::vector<int> indicators(static_cast<size_t>(n), -1);
  for (const auto& s : align.sites) {
    if (s.pos < 0 || s.pos >= n) throw SiteOutOfRange();
    indicators[static_cast<size_t>(s.pos)] = s.motif;
  }
  return indicators;
}

Alignment indicators_to_alignment(const std::vector<int>& indicators) {
  Alignment align;
  for (int pos = 0; pos < static_cast<int>(indicators.size()); ++pos)
    if (indicators[static_cast<size_t>(pos)] >= 0)
      align.sites.push_back({pos, indicators[static_cast<size_t>(pos)]});
  return align;
}

VecI CountSummary::total_letter_counts() const {
  VecI total = background_letter_counts();
  for (const auto& ck : column_counts) total += ck.rowwise().sum();
  return total;
}

VecI CountSummary::motif_letter_counts() const {
  VecI c = VecI::Zero(d);
  for (const auto& ck : column_counts) c += ck.rowwise().sum();
  return c;
}

void CountSummary::validate() const {
  if (word_counts.size() != d + num_motifs())
    throw DimensionMismatch("word_counts length must equal D");
  if ((word_counts.array() < 0).any())
    throw InvalidArgument("negative word count");
  for (int k = 0; k < num_motifs(); ++k) {
    const auto& ck = column_counts[static_cast<size_t>(k)];
    if (ck.rows() != d) throw DimensionMismatch("column count depth mismatch");
    if ((ck.array() < 0).any()) throw InvalidArgument("negative column count");
    // Every column of an aligned count matrix holds one letter per site.
    for (int j = 0; j < ck.cols(); ++j)
      if (ck.col(j).sum() != word_counts[d + k])
        throw InvalidArgument("column sum disagrees with site count");
  }
}

CountSummary derive_counts(const Sequence& seq, const Dictionary& dict,
                           const Alignment& align) {
  const int d = dict.d();
  const int n = seq.size();
  CountSummary counts;
  counts.d = d;
  counts.word_counts = VecI::Zero(dict.size());
  counts.column_counts.reserve(dict.motifs.size());
  for (const auto& m : dict.motifs)
    counts.column_counts.push_back(MatI::Zero(d, m.width()));

  std::vector<char> occupied(static_cast<size_t>(n), 0);
  for (const auto& site : align.sites) {
    if (site.motif < 0 || site.motif >= static_cast<int>(dict.motifs.size()))
      throw UnknownMotifIndex();
    const int w = dict.motif_width(site.motif);
    if (site.pos < 0 || site.pos + w > n || !seq.fits_in_record(site.pos, w))
      throw SiteOutOfRange("site at " + std::to_string(site.pos));
    for (int j = 0; j < w; ++j) {
      if (occupied[static_cast<size_t>(site.pos + j)])
        throw OverlappingSites("position " + std::to_string(site.pos + j));
      occupied[static_cast<size_t>(site.pos + j)] = 1;
      counts.column_counts[static_cast<size_t>(site.motif)](seq.data[static_cast<size_t>(site.pos + j)], j) += 1;
    }
    counts.word_counts[d + site.motif] += 1;
  }
  for (int pos = 0; pos < n; ++pos)
    if (!occupied[static_cast<size_t>(pos)])
      counts.word_counts[seq.data[static_cast<size_t>(pos)]] += 1;
  return counts;
}

void PriorSpec::validate() const {
  if (is_mixture()) {
    double wsum = 0.0;
    for (const auto& [weight, component] : mixture) {
      if (weight <= 0.0) throw InvalidArgument("mixture weight must be positive");
      wsum += weight;
      component.validate();
    }
    if (std::abs(wsum - 1.0) > kSimplexTol)
      throw InvalidArgument("mixture weights do not sum to 1");
    return;
  }
  if ((beta0.array() <= 0.0).any() || (alpha.array() <= 0.0).any() ||
      (gamma.array() <= 0.0).any())
    throw NonPositivePseudoCount();
}

PriorSpec default_priors(int d, int num_motifs) {
  PriorSpec priors;
  priors.beta0 = Vec::Ones(d + num_motifs);
  priors.alpha = Vec::Ones(d);
  priors.gamma = Vec::Constant(d, 1.0 / d);
  return priors;
}

}  // namespace motifmap
