#ifndef MOTIFMAP_IO_HPP
#define MOTIFMAP_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "motifmap/asymptotics.hpp"
#include "motifmap/core.hpp"
#include "motifmap/sensitivity.hpp"

namespace motifmap {

// FASTA records are concatenated into one Sequence; record boundaries are
// kept so that no site may straddle them.
struct FastaRecord {
  std::string name;
  int start = 0;
  int length = 0;
};

struct FastaInput {
  Sequence seq;
  std::vector<FastaRecord> records;
};

FastaInput read_fasta(std::istream& in, const Alphabet& alphabet);
FastaInput read_fasta_file(const std::string& path, const Alphabet& alphabet);
void write_fasta(std::ostream& out, const Sequence& seq,
                 const std::string& name = "seq", int line_width = 70);

// JSON codecs. Alignments carry the motif widths so scores can be computed
// without the PWMs.
nlohmann::json dictionary_to_json(const Dictionary& dict);
Dictionary dictionary_from_json(const nlohmann::json& j);
nlohmann::json alignment_to_json(const Alignment& align,
                                 const std::vector<int>& widths);
std::pair<Alignment, std::vector<int>> alignment_from_json(const nlohmann::json& j);
nlohmann::json priors_to_json(const PriorSpec& priors);
PriorSpec priors_from_json(const nlohmann::json& j);

// Fills any empty prior fields for a d-letter alphabet with num_motifs
// motifs: unit beta0, alpha tied to the letter part, equal gamma summing to 1.
PriorSpec complete_priors(PriorSpec priors, int d, int num_motifs);

// Numeric formatting used by every CSV and CLI report: 12 significant digits.
std::string format_number(double value);

void write_df_grid_csv(std::ostream& out, const std::vector<DfGridRow>& rows,
                       const std::string& profile_name,
                       const std::vector<double>* r_max = nullptr);
void write_sensitivity_csv(std::ostream& out, const SensitivityReport& report);

// d x w count matrix from CSV rows of per-position letter counts (w rows,
// d columns, optional letter header row).
Mat read_count_matrix_csv(std::istream& in, int d);

}  // namespace motifmap

#endif
