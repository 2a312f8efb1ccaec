// motifmap command line front end: simulation, scoring, discovery, divergence
// grids, prior sensitivity sweeps, and the exhaustive small-instance oracle.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifmap/asymptotics.hpp"
#include "motifmap/core.hpp"
#include "motifmap/criteria.hpp"
#include "motifmap/io.hpp"
#include "motifmap/likelihood.hpp"
#include "motifmap/map_score.hpp"
#include "motifmap/sampler.hpp"
#include "motifmap/sensitivity.hpp"
#include "motifmap/simulate.hpp"

using nlohmann::json;
using namespace motifmap;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Validation:
      return 2;
    case ErrorKind::Resource:
      return 3;
    case ErrorKind::Domain:
      return 4;
  }
  return 2;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
  return values;
}

Vec parse_vec(const std::string& text) {
  auto values = parse_double_list(text);
  Vec v(values.size());
  for (size_t i = 0; i < values.size(); ++i) v[static_cast<int>(i)] = values[i];
  return v;
}

// "a:b" or "a:b:step" integer ranges, or a plain comma list.
std::vector<int> parse_int_range(const std::string& text) {
  std::vector<int> values;
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    std::vector<long> parts;
    while (std::getline(ss, part, ':')) parts.push_back(std::stol(part));
    if (parts.size() < 2 || parts.size() > 3)
      throw InvalidArgument("range must be lo:hi or lo:hi:step");
    long step = parts.size() == 3 ? parts[2] : 1;
    if (step < 1) throw InvalidArgument("range step must be positive");
    for (long v = parts[0]; v <= parts[1]; v += step)
      values.push_back(static_cast<int>(v));
  } else {
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) values.push_back(std::stoi(cell));
  }
  if (values.empty()) throw InvalidArgument("empty integer range");
  return values;
}

// "lo:hi:count" evenly spaced doubles, or a plain comma list.
std::vector<double> parse_double_range(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_double_list(text);
  std::stringstream ss(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3)
    throw InvalidArgument("real range must be lo:hi:count");
  double lo = std::stod(parts[0]);
  double hi = std::stod(parts[1]);
  int count = std::stoi(parts[2]);
  if (count < 1) throw InvalidArgument("range count must be positive");
  std::vector<double> values;
  if (count == 1) {
    values.push_back(lo);
    return values;
  }
  for (int i = 0; i < count; ++i)
    values.push_back(lo + (hi - lo) * i / (count - 1));
  return values;
}

PriorSpec load_priors(const std::string& path, int d, int num_motifs) {
  if (path.empty()) return complete_priors(PriorSpec{}, d, num_motifs);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("priors json: ") + e.what());
  }
  return complete_priors(priors_from_json(j), d, num_motifs);
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ParseError("cannot open " + path + " for writing");
  return file;
}

// every reported number carries 12 significant digits
double sig12(double value) { return std::stod(format_number(value)); }

// --- simulate -------------------------------------------------------------

struct SimulateArgs {
  int n = 0;
  std::string theta0 = "";
  std::vector<std::string> motif_specs;
  bool exact = false;
  std::uint64_t seed = 0;
  std::string out = "sim";
};

int run_simulate(const SimulateArgs& args) {
  const Alphabet alphabet = dna_alphabet();
  const int d = alphabet.size();
  Vec theta0 = args.theta0.empty() ? Vec::Constant(d, 1.0 / d)
                                   : parse_vec(args.theta0);

  std::vector<PlantedMotif> motifs;
  for (const auto& spec : args.motif_specs) {
    std::stringstream ss(spec);
    std::string wpart, cpart, kpart;
    if (!std::getline(ss, wpart, ':') || !std::getline(ss, cpart, ':') ||
        !std::getline(ss, kpart))
      throw InvalidArgument("motif spec must be w:c:k or w:c:@pwm.json");
    PlantedMotif motif;
    motif.width = std::stoi(wpart);
    motif.proportion = std::stod(cpart);
    motif.exact = args.exact;
    if (!kpart.empty() && kpart[0] == '@') {
      std::ifstream in(kpart.substr(1));
      if (!in) throw ParseError("cannot open " + kpart.substr(1));
      json j;
      in >> j;
      Pwm pwm;
      const auto& columns = j.at("columns");
      pwm.columns = Mat(d, columns.size());
      for (size_t c = 0; c < columns.size(); ++c)
        for (int i = 0; i < d; ++i)
          pwm.columns(i, static_cast<int>(c)) = columns[c][static_cast<size_t>(i)].get<double>();
      pwm.validate();
      motif.pwm = pwm;
      motif.width = pwm.width();
    } else {
      motif.composition = parse_vec(kpart);
    }
    motifs.push_back(motif);
  }

  Simulated sim = generate(args.n, theta0, motifs, args.seed, alphabet);

  std::ofstream fasta(args.out + ".fasta");
  if (!fasta) throw ParseError("cannot write " + args.out + ".fasta");
  write_fasta(fasta, sim.seq, "sim_seed" + std::to_string(args.seed));

  std::vector<int> widths;
  for (const auto& m : motifs) widths.push_back(m.width);
  json truth = alignment_to_json(sim.truth, widths);
  truth["n"] = args.n;
  truth["seed"] = args.seed;
  truth["motifs"] = json::array();
  for (size_t k = 0; k < motifs.size(); ++k)
    truth["motifs"].push_back(
        {{"width", motifs[k].width},
         {"proportion", motifs[k].proportion},
         {"exact", motifs[k].exact},
         {"consensus", consensus(sim.motifs[k], alphabet)}});
  std::ofstream truth_out(args.out + ".truth.json");
  if (!truth_out) throw ParseError("cannot write " + args.out + ".truth.json");
  truth_out << truth.dump(2) << '\n';
  std::cout << "wrote " << args.out << ".fasta and " << args.out
            << ".truth.json (" << sim.truth.sites.size() << " sites)\n";
  return 0;
}

// --- score ----------------------------------------------------------------

struct ScoreArgs {
  std::string fasta;
  std::string alignment;
  std::string priors;
  bool null_align = false;
  std::string criteria_csv;
};

int run_score(const ScoreArgs& args) {
  const Alphabet alphabet = dna_alphabet();
  FastaInput input = read_fasta_file(args.fasta, alphabet);
  const int d = alphabet.size();

  Alignment align;
  std::vector<int> widths;
  if (!args.alignment.empty()) {
    std::ifstream in(args.alignment);
    if (!in) throw ParseError("cannot open " + args.alignment);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("alignment json: ") + e.what());
    }
    std::tie(align, widths) = alignment_from_json(j);
  }
  if (args.null_align) align.sites.clear();

  Dictionary dict;
  dict.alphabet = alphabet;
  for (int w : widths) dict.motifs.push_back(uniform_pwm(d, w));
  dict.rho = Vec::Constant(dict.size(), 1.0 / dict.size());

  PriorSpec priors = load_priors(args.priors, d, static_cast<int>(widths.size()));
  CountSummary counts = derive_counts(input.seq, dict, align);
  MapScoreValue score = log_map(counts, priors);

  // classical criteria from the maximum-likelihood plug-in fit
  Dictionary fitted = dict;
  {
    Vec usage = counts.word_counts.cast<double>();
    fitted.rho = usage.sum() > 0 ? Vec(usage / usage.sum())
                                 : Vec::Constant(dict.size(), 1.0 / dict.size());
    for (int k = 0; k < static_cast<int>(widths.size()); ++k) {
      const auto& ck = counts.column_counts[static_cast<size_t>(k)];
      int sites = counts.word_counts[d + k];
      for (int j = 0; j < widths[static_cast<size_t>(k)]; ++j)
        fitted.motifs[static_cast<size_t>(k)].columns.col(j) =
            sites > 0 ? Vec(ck.col(j).cast<double>() / sites)
                      : Vec::Constant(d, 1.0 / d);
    }
  }
  double loglik = complete_data_loglik(counts, fitted);
  int params = motif_param_count(d, widths);
  long n = input.seq.size();

  VecI letter_totals = counts.total_letter_counts();
  double null_loglik = 0.0;
  for (int i = 0; i < d; ++i)
    if (letter_totals[i] > 0)
      null_loglik += letter_totals[i] *
                     std::log(static_cast<double>(letter_totals[i]) / n);

  // posterior-mean PWMs against the smoothed background composition
  Vec gamma = priors.is_mixture() ? Vec::Constant(d, 1.0 / d)
                                  : priors.gamma;
  Vec alpha = priors.is_mixture() ? Vec::Ones(d) : priors.alpha;
  Vec background = counts.background_letter_counts().cast<double>() + alpha;
  background /= background.sum();

  json out;
  out["log_map"] = sig12(score.log_map);
  out["components"] = {{"word_usage", sig12(score.word_usage)},
                       {"background", sig12(score.background)},
                       {"motif_columns", sig12(score.motif_columns)}};
  out["num_sites"] = align.sites.size();
  out["aic"] = sig12(aic(loglik, params));
  out["bic"] = sig12(bic(loglik, params, n));
  out["aic_null"] = sig12(aic(null_loglik, d - 1));
  out["bic_null"] = sig12(bic(null_loglik, d - 1, n));
  out["kli"] = json::array();
  for (int k = 0; k < static_cast<int>(widths.size()); ++k) {
    const auto& ck = counts.column_counts[static_cast<size_t>(k)];
    Pwm posterior_mean;
    posterior_mean.columns = Mat(d, widths[static_cast<size_t>(k)]);
    for (int j = 0; j < widths[static_cast<size_t>(k)]; ++j) {
      Vec col = ck.col(j).cast<double>() + gamma;
      posterior_mean.columns.col(j) = col / col.sum();
    }
    out["kli"].push_back(sig12(kli(posterior_mean, background)));
  }
  std::cout << out.dump(2) << '\n';

  if (!args.criteria_csv.empty()) {
    std::ofstream csv(args.criteria_csv);
    if (!csv) throw ParseError("cannot write " + args.criteria_csv);
    csv << "criterion,model,score\n";
    csv << "logMAP,motif," << format_number(score.log_map) << '\n';
    csv << "AIC,motif," << format_number(aic(loglik, params)) << '\n';
    csv << "AIC,null," << format_number(aic(null_loglik, d - 1)) << '\n';
    csv << "BIC,motif," << format_number(bic(loglik, params, n)) << '\n';
    csv << "BIC,null," << format_number(bic(null_loglik, d - 1, n)) << '\n';
    for (size_t k = 0; k < out["kli"].size(); ++k)
      csv << "KLI,motif" << k << ','
          << format_number(out["kli"][k].get<double>()) << '\n';
  }
  return 0;
}

// --- discover ---------------------------------------------------------------

struct DiscoverArgs {
  std::string fasta;
  std::string widths = "8,10,12";
  int max_motifs = 3;
  int iters = 5000;
  int burnin = 1000;
  int chains = 5;
  std::uint64_t seed = 0;
  std::string priors;
  std::string out;
  std::string trace_csv;
};

int run_discover(const DiscoverArgs& args) {
  const Alphabet alphabet = dna_alphabet();
  FastaInput input = read_fasta_file(args.fasta, alphabet);
  if (args.max_motifs < 1)
    throw InvalidArgument("--max-motifs must be at least 1");

  DaConfig cfg;
  cfg.widths = parse_int_range(args.widths);
  cfg.iterations = args.iters;
  cfg.burn_in = args.burnin;
  cfg.chains = args.chains;
  cfg.seed = args.seed;
  if (!args.priors.empty()) {
    std::ifstream in(args.priors);
    if (!in) throw ParseError("cannot open " + args.priors);
    json j;
    in >> j;
    cfg.priors = priors_from_json(j);
  }

  DiscoveryResult result = progressive_discover(input.seq, cfg, args.max_motifs);

  json out;
  out["accepted"] = json::array();
  for (size_t k = 0; k < result.dictionary.motifs.size(); ++k) {
    const Pwm& pwm = result.dictionary.motifs[k];
    json sites = json::array();
    for (const auto& site : result.best_alignment.sites)
      if (site.motif == static_cast<int>(k)) sites.push_back(site.pos);
    json columns = json::array();
    for (int j = 0; j < pwm.width(); ++j) {
      json col = json::array();
      for (int i = 0; i < pwm.depth(); ++i) col.push_back(sig12(pwm.columns(i, j)));
      columns.push_back(col);
    }
    out["accepted"].push_back({{"width", pwm.width()},
                               {"consensus", consensus(pwm, alphabet)},
                               {"delta_log_map", sig12(result.delta_log_map[k])},
                               {"sites", sites},
                               {"pwm", columns}});
  }
  out["final_log_map"] = sig12(result.final_log_map);
  out["num_accepted"] = result.dictionary.motifs.size();
  {
    std::vector<int> widths;
    for (const auto& pwm : result.dictionary.motifs) widths.push_back(pwm.width());
    out["alignment"] = alignment_to_json(result.best_alignment, widths);
  }

  std::ofstream file;
  std::ostream& os = open_or_stdout(file, args.out);
  os << out.dump(2) << '\n';

  if (!args.trace_csv.empty()) {
    std::ofstream csv(args.trace_csv);
    if (!csv) throw ParseError("cannot write " + args.trace_csv);
    csv << "iteration,log_map\n";
    for (size_t i = 0; i < result.final_trace.log_map_trace.size(); ++i)
      csv << i << ',' << format_number(result.final_trace.log_map_trace[i])
          << '\n';
  }
  return 0;
}

// --- divergence -------------------------------------------------------------

struct DivergenceArgs {
  std::string profile = "symmetric";
  std::string theta0;
  std::string k;
  std::string w_range = "2:50";
  std::string c_range = "0.001:0.02:20";
  int d = 4;
  bool add_max = false;
  std::string out;
};

int run_divergence(const DivergenceArgs& args) {
  DfGridSpec spec;
  spec.d = args.d;
  if (args.profile == "symmetric") {
    spec.kind = ProfileKind::Symmetric;
  } else if (args.profile == "repeat") {
    spec.kind = ProfileKind::Repeat;
  } else if (args.profile == "custom") {
    spec.kind = ProfileKind::Custom;
    if (args.theta0.empty() || args.k.empty())
      throw InvalidArgument("custom profile needs --theta0 and --k");
    // four-decimal table rows are accepted; normalize onto the simplex
    spec.theta0 = parse_vec(args.theta0);
    spec.k = parse_vec(args.k);
    if (spec.theta0.sum() <= 0.0 || spec.k.sum() <= 0.0)
      throw InvalidArgument("theta0 and k must have positive mass");
    spec.theta0 /= spec.theta0.sum();
    spec.k /= spec.k.sum();
  } else {
    throw InvalidArgument("profile must be symmetric, repeat or custom");
  }

  std::vector<int> w_values = parse_int_range(args.w_range);
  std::vector<double> c_values = parse_double_range(args.c_range);
  std::vector<DfGridRow> rows = df_grid(c_values, w_values, spec);

  std::ofstream file;
  std::ostream& os = open_or_stdout(file, args.out);
  if (args.add_max) {
    std::vector<double> r_max(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
      r_max[i] = map_df_max(rows[i].c, rows[i].w, args.d);
    write_df_grid_csv(os, rows, args.profile, &r_max);
  } else {
    write_df_grid_csv(os, rows, args.profile);
  }
  return 0;
}

// --- sensitivity ------------------------------------------------------------

struct SensitivityArgs {
  std::string counts;
  std::string gamma;
  std::string epsilons = "0.5";
  int grid_points = 99;
  std::vector<std::string> prior_kinds{"equal"};
  std::string out = "sensitivity";
};

ColumnPrior build_column_prior(const std::string& kind, const Mat& counts,
                               const std::string& gamma_arg) {
  const int d = static_cast<int>(counts.rows());
  if (kind == "equal") {
    return ColumnPrior::single(gamma_arg.empty() ? Vec::Constant(d, 1.0 / d)
                                                 : parse_vec(gamma_arg));
  }
  if (kind == "data") {
    Vec totals = counts.rowwise().sum();
    if (totals.sum() <= 0.0) throw InvalidArgument("empty count matrix");
    totals = (totals.array() + 0.5).matrix();  // keep pseudo-counts positive
    return ColumnPrior::single(totals / totals.sum());
  }
  if (kind == "mix3") {
    ColumnPrior prior;
    Vec at(4), gc(4);
    at << 0.35, 0.15, 0.15, 0.35;
    gc << 0.15, 0.35, 0.35, 0.15;
    prior.components.emplace_back(1.0 / 3, at);
    prior.components.emplace_back(1.0 / 3, gc);
    prior.components.emplace_back(1.0 / 3, Vec::Constant(4, 0.25));
    return prior;
  }
  if (kind == "mix9") {
    ColumnPrior prior;
    for (int i = 0; i < 4; ++i) {
      Vec biased = Vec::Constant(4, 0.15);
      biased[i] = 0.55;
      prior.components.emplace_back(1.0 / 9, biased);
    }
    const int pairs[4][2] = {{0, 3}, {1, 2}, {0, 2}, {1, 3}};
    for (const auto& pair : pairs) {
      Vec biased = Vec::Constant(4, 0.225);
      biased[pair[0]] = 0.275;
      biased[pair[1]] = 0.275;
      prior.components.emplace_back(1.0 / 9, biased);
    }
    prior.components.emplace_back(1.0 / 9, Vec::Constant(4, 0.25));
    return prior;
  }
  throw InvalidArgument("prior kind must be equal, data, mix3 or mix9");
}

int run_sensitivity(const SensitivityArgs& args) {
  const int d = 4;
  std::ifstream counts_in(args.counts);
  if (!counts_in) throw ParseError("cannot open " + args.counts);
  Mat counts = read_count_matrix_csv(counts_in, d);

  std::vector<double> epsilons = parse_double_list(args.epsilons);
  for (double eps : epsilons)
    if (!(eps > 0.0 && eps < 1.0))
      throw InvalidArgument("epsilon must lie strictly in (0,1)");
  DeltaGrid grid = DeltaGrid::uniform(args.grid_points);

  json summary = json::array();
  for (const auto& kind : args.prior_kinds) {
    ColumnPrior pi0 = build_column_prior(kind, counts, args.gamma);
    for (double eps : epsilons) {
      SensitivityReport report = delta_grid_profile(counts, pi0, grid, eps);
      std::ostringstream name;
      name << args.out << '_' << kind << "_eps" << eps << ".csv";
      std::ofstream csv(name.str());
      if (!csv) throw ParseError("cannot write " + name.str());
      write_sensitivity_csv(csv, report);
      summary.push_back(
          {{"prior_kind", kind},
           {"epsilon", eps},
           {"log_map_min", sig12(report.log_map_min)},
           {"log_map_max", sig12(report.log_map_max)},
           {"log_map_range", sig12(report.log_map_max - report.log_map_min)}});
    }
  }
  std::ofstream summary_out(args.out + "_summary.json");
  if (!summary_out) throw ParseError("cannot write " + args.out + "_summary.json");
  summary_out << summary.dump(2) << '\n';
  std::cout << summary.dump(2) << '\n';
  return 0;
}

// --- oracle -----------------------------------------------------------------

struct OracleArgs {
  std::string fasta;
  std::string widths;
  std::string priors;
  double cap = 1e6;
};

int run_oracle(const OracleArgs& args) {
  const Alphabet alphabet = dna_alphabet();
  FastaInput input = read_fasta_file(args.fasta, alphabet);
  std::vector<int> widths =
      args.widths.empty() ? std::vector<int>{} : parse_int_range(args.widths);
  PriorSpec priors =
      load_priors(args.priors, alphabet.size(), static_cast<int>(widths.size()));

  double num_alignments = count_alignments(input.seq, widths);
  double log_numerator = exact_bayes_numerator(input.seq, priors, widths, args.cap);
  double null_marginal =
      null_log_marginal(input.seq.letter_counts(), priors.alpha);

  json out;
  out["n"] = input.seq.size();
  out["num_alignments"] = num_alignments;
  out["log_bayes_numerator"] = sig12(log_numerator);
  out["null_log_marginal"] = sig12(null_marginal);
  out["log_bayes_factor"] = sig12(log_numerator - null_marginal);
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAP model selection toolkit for sequence pattern models"};
  app.require_subcommand(1);

  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "generate planted-motif sequences");
  sim->add_option("--n", sim_args.n, "sequence length")->required();
  sim->add_option("--theta0", sim_args.theta0, "background letter probabilities");
  sim->add_option("--motif", sim_args.motif_specs,
                  "motif spec w:c:k (composition) or w:c:@pwm.json");
  sim->add_flag("--exact", sim_args.exact, "plant fixed consensus instances");
  sim->add_option("--seed", sim_args.seed, "rng seed");
  sim->add_option("--out", sim_args.out, "output prefix");

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "logMAP and criteria for an alignment");
  score->add_option("--fasta", score_args.fasta, "sequence file")->required();
  score->add_option("--alignment", score_args.alignment, "alignment json");
  score->add_flag("--null-align", score_args.null_align, "score the empty alignment");
  score->add_option("--priors", score_args.priors, "priors json");
  score->add_option("--criteria-csv", score_args.criteria_csv,
                    "write criterion,model,score rows");

  DiscoverArgs disc_args;
  auto* disc = app.add_subcommand("discover", "progressive motif discovery");
  disc->add_option("--fasta", disc_args.fasta, "sequence file")->required();
  disc->add_option("--widths", disc_args.widths, "candidate widths (list or lo:hi)");
  disc->add_option("--max-motifs", disc_args.max_motifs, "maximum motifs to accept");
  disc->add_option("--iters", disc_args.iters, "iterations per chain");
  disc->add_option("--burnin", disc_args.burnin, "burn-in iterations");
  disc->add_option("--chains", disc_args.chains, "independent chains");
  disc->add_option("--seed", disc_args.seed, "rng seed");
  disc->add_option("--priors", disc_args.priors, "priors json");
  disc->add_option("--out", disc_args.out, "result json path (default stdout)");
  disc->add_option("--trace-csv", disc_args.trace_csv, "write iteration,log_map");

  DivergenceArgs div_args;
  auto* div = app.add_subcommand("divergence", "MAP divergence factor grids");
  div->add_option("--profile", div_args.profile, "symmetric | repeat | custom");
  div->add_option("--theta0", div_args.theta0, "custom background proportions");
  div->add_option("--k", div_args.k, "custom motif composition");
  div->add_option("--w-range", div_args.w_range, "widths (list or lo:hi[:step])");
  div->add_option("--c-range", div_args.c_range, "proportions (list or lo:hi:count)");
  div->add_option("--d", div_args.d, "alphabet size");
  div->add_flag("--max", div_args.add_max, "add the matched-composition bound");
  div->add_option("--out", div_args.out, "csv path (default stdout)");

  SensitivityArgs sens_args;
  auto* sens = app.add_subcommand("sensitivity", "prior contamination sweeps");
  sens->add_option("--counts", sens_args.counts, "motif count matrix csv")->required();
  sens->add_option("--gamma", sens_args.gamma, "base column pseudo-counts");
  sens->add_option("--epsilon", sens_args.epsilons, "contamination proportions");
  sens->add_option("--grid-points", sens_args.grid_points, "delta* grid size");
  sens->add_option("--prior-kind", sens_args.prior_kinds,
                   "equal | data | mix3 | mix9 (repeatable)");
  sens->add_option("--out", sens_args.out, "output prefix");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "exhaustive Bayes factor numerator");
  oracle->add_option("--fasta", oracle_args.fasta, "sequence file")->required();
  oracle->add_option("--widths", oracle_args.widths, "motif widths");
  oracle->add_option("--priors", oracle_args.priors, "priors json");
  oracle->add_option("--cap", oracle_args.cap, "alignment count refusal cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(sim)) return run_simulate(sim_args);
    if (app.got_subcommand(score)) return run_score(score_args);
    if (app.got_subcommand(disc)) return run_discover(disc_args);
    if (app.got_subcommand(div)) return run_divergence(div_args);
    if (app.got_subcommand(sens)) return run_sensitivity(sens_args);
    if (app.got_subcommand(oracle)) return run_oracle(oracle_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
