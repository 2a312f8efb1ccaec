#include "motifmap/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace motifmap {

using nlohmann::json;

FastaInput read_fasta(std::istream& in, const Alphabet& alphabet) {
  FastaInput input;
  input.seq.alphabet = alphabet;
  input.seq.record_starts.clear();

  std::string line;
  bool in_record = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (in_record && !input.records.empty())
        input.records.back().length =
            input.seq.size() - input.records.back().start;
      FastaRecord record;
      record.name = line.substr(1);
      record.start = input.seq.size();
      input.records.push_back(record);
      input.seq.record_starts.push_back(record.start);
      in_record = true;
      continue;
    }
    if (!in_record) {
      // headerless input: treat as a single anonymous record
      input.records.push_back({"", 0, 0});
      input.seq.record_starts.push_back(0);
      in_record = true;
    }
    for (char c : line) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int idx = alphabet.index_of(static_cast<char>(std::toupper(c)));
      if (idx < 0)
        throw ParseError(std::string("letter '") + c + "' not in alphabet");
      input.seq.data.push_back(static_cast<std::uint8_t>(idx));
    }
  }
  if (!input.records.empty())
    input.records.back().length = input.seq.size() - input.records.back().start;
  if (input.seq.record_starts.empty()) input.seq.record_starts.push_back(0);
  input.seq.validate();
  return input;
}

FastaInput read_fasta_file(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_fasta(in, alphabet);
}

void write_fasta(std::ostream& out, const Sequence& seq, const std::string& name,
                 int line_width) {
  for (size_t rec = 0; rec < seq.record_starts.size(); ++rec) {
    int start = seq.record_starts[rec];
    int end = rec + 1 < seq.record_starts.size()
                  ? seq.record_starts[rec + 1]
                  : seq.size();
    out << '>' << name;
    if (seq.record_starts.size() > 1) out << '_' << rec;
    out << '\n';
    for (int pos = start; pos < end; ++pos) {
      out << seq.alphabet.letter(seq.data[static_cast<size_t>(pos)]);
      if ((pos - start + 1) % line_width == 0) out << '\n';
    }
    if ((end - start) % line_width != 0 || end == start) out << '\n';
  }
}

namespace {

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vec vec_from_json(const json& arr) {
  if (!arr.is_array()) throw ParseError("expected a numeric array");
  Vec v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[static_cast<int>(i)] = arr[i].get<double>();
  return v;
}

}  // namespace

json dictionary_to_json(const Dictionary& dict) {
  json j;
  j["alphabet"] = dict.alphabet.letters;
  j["rho"] = vec_to_json(dict.rho);
  j["motifs"] = json::array();
  for (const auto& pwm : dict.motifs) {
    json columns = json::array();
    for (int c = 0; c < pwm.width(); ++c)
      columns.push_back(vec_to_json(pwm.columns.col(c)));
    j["motifs"].push_back({{"width", pwm.width()}, {"columns", columns}});
  }
  return j;
}

Dictionary dictionary_from_json(const json& j) {
  Dictionary dict;
  dict.alphabet = Alphabet{j.at("alphabet").get<std::string>()};
  for (const auto& motif : j.at("motifs")) {
    const auto& columns = motif.at("columns");
    Pwm pwm;
    pwm.columns = Mat(dict.d(), columns.size());
    for (size_t c = 0; c < columns.size(); ++c)
      pwm.columns.col(static_cast<int>(c)) = vec_from_json(columns[c]);
    dict.motifs.push_back(pwm);
  }
  dict.rho = vec_from_json(j.at("rho"));
  dict.validate();
  return dict;
}

json alignment_to_json(const Alignment& align, const std::vector<int>& widths) {
  json j;
  j["widths"] = widths;
  j["sites"] = json::array();
  for (const auto& site : align.sites)
    j["sites"].push_back({{"pos", site.pos}, {"motif", site.motif}});
  return j;
}

std::pair<Alignment, std::vector<int>> alignment_from_json(const json& j) {
  Alignment align;
  std::vector<int> widths = j.at("widths").get<std::vector<int>>();
  for (const auto& site : j.at("sites"))
    align.sites.push_back(
        {site.at("pos").get<int>(), site.at("motif").get<int>()});
  align.sort_sites();
  return {align, widths};
}

json priors_to_json(const PriorSpec& priors) {
  json j;
  if (priors.is_mixture()) {
    j["mixture"] = json::array();
    for (const auto& [weight, component] : priors.mixture)
      j["mixture"].push_back(
          {{"weight", weight}, {"prior", priors_to_json(component)}});
    return j;
  }
  if (priors.beta0.size() > 0) j["beta0"] = vec_to_json(priors.beta0);
  if (priors.alpha.size() > 0) j["alpha"] = vec_to_json(priors.alpha);
  if (priors.gamma.size() > 0) j["gamma"] = vec_to_json(priors.gamma);
  return j;
}

PriorSpec priors_from_json(const json& j) {
  PriorSpec priors;
  if (j.contains("mixture")) {
    for (const auto& component : j.at("mixture"))
      priors.mixture.emplace_back(component.at("weight").get<double>(),
                                  priors_from_json(component.at("prior")));
    return priors;
  }
  if (j.contains("beta0")) priors.beta0 = vec_from_json(j.at("beta0"));
  if (j.contains("alpha")) priors.alpha = vec_from_json(j.at("alpha"));
  if (j.contains("gamma")) priors.gamma = vec_from_json(j.at("gamma"));
  return priors;
}

PriorSpec complete_priors(PriorSpec priors, int d, int num_motifs) {
  if (priors.is_mixture()) {
    for (auto& [weight, component] : priors.mixture)
      component = complete_priors(component, d, num_motifs);
    return priors;
  }
  const int num_words = d + num_motifs;
  if (priors.beta0.size() == 0) priors.beta0 = Vec::Ones(num_words);
  if (priors.beta0.size() == d && num_motifs > 0) {
    Vec grown = Vec::Ones(num_words);
    grown.head(d) = priors.beta0;
    priors.beta0 = grown;
  }
  if (priors.beta0.size() != num_words)
    throw DimensionMismatch("beta0 length must equal d + number of motifs");
  if (priors.alpha.size() == 0) priors.alpha = priors.beta0.head(d);
  if (priors.gamma.size() == 0) priors.gamma = Vec::Constant(d, 1.0 / d);
  priors.validate();
  return priors;
}

std::string format_number(double value) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

void write_df_grid_csv(std::ostream& out, const std::vector<DfGridRow>& rows,
                       const std::string& profile_name,
                       const std::vector<double>* r_max) {
  out << (r_max ? "c,w,r,r_max,profile\n" : "c,w,r,profile\n");
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    out << format_number(row.c) << ',' << row.w << ',';
    if (row.valid) out << format_number(row.r);
    if (r_max) out << ',' << format_number((*r_max)[i]);
    out << ',' << profile_name << '\n';
  }
}

void write_sensitivity_csv(std::ostream& out, const SensitivityReport& report) {
  out << "delta_star,epsilon,d_m,d_k,d_e,log_map\n";
  for (const auto& row : report.rows)
    out << format_number(row.delta_star) << ',' << format_number(report.epsilon)
        << ',' << format_number(row.d_m) << ',' << format_number(row.d_k) << ','
        << format_number(row.d_e) << ',' << format_number(row.log_map) << '\n';
}

Mat read_count_matrix_csv(std::istream& in, int d) {
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        size_t used = 0;
        fields.push_back(std::stod(cell, &used));
        if (used != cell.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (first) {
        first = false;  // header row
        continue;
      }
      throw ParseError("non-numeric count row: " + line);
    }
    first = false;
    if (static_cast<int>(fields.size()) != d)
      throw ParseError("count row needs exactly " + std::to_string(d) + " fields");
    rows.push_back(fields);
  }
  if (rows.empty()) throw ParseError("empty count matrix");
  Mat counts(d, static_cast<int>(rows.size()));
  for (size_t p = 0; p < rows.size(); ++p)
    for (int i = 0; i < d; ++i)
      counts(i, static_cast<int>(p)) = rows[p][static_cast<size_t>(i)];
  if ((counts.array() < 0.0).any()) throw ParseError("negative count");
  return counts;
}

}  // namespace motifmap
