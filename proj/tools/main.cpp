#include "quotbn/errors.hpp"
#include "quotbn/genus0.hpp"
#include "quotbn/jsonio.hpp"
#include "quotbn/ledger.hpp"
#include "quotbn/scenario.hpp"
#include "quotbn/verify.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace quotbn;

// Exit codes: 0 ok, 1 invariant failure, 2 parameter error, 3 sampling error.
constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kParameterError = 2;
constexpr int kSamplingError = 3;

struct OutputOptions {
  std::string format = "text";
  std::string out = "-";
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out, "output path, '-' for stdout");
}

void emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.out == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw ArgumentError("cannot open output path: " + opts.out);
  file << payload;
}

std::string existence_rule_text(const std::string& rule) {
  if (rule == "segre-above-genus")
    return "no rank-2 bundle has Segre invariant above the genus";
  if (rule == "elliptic-low-segre") return "elliptic curve with d >= 3";
  if (rule == "large-degree") return "g >= s >= 0 and d > 2(2g-1)";
  return "no existence clause applies";
}

std::string render_report_text(const StratumReport& rep) {
  std::ostringstream os;
  os << "scenario: genus=" << rep.sc.g << " degree=" << rep.sc.d
     << " segre=" << rep.sc.s << " a=" << rep.sc.a
     << " truncation=" << rep.sc.truncation << "\n";
  os << "codimension: " << rep.codim << "\n";
  os << "ranks: pushforward=" << rep.pushforward_rank
     << " fiber_h0=" << rep.fiber_h0_dim << " target=" << rep.target_rank
     << " large_d_ok=" << (rep.large_d_ok ? "true" : "false") << "\n";
  os << "existence: " << existence_name(rep.existence.status) << " ["
     << existence_rule_text(rep.existence.rule) << "]\n";
  if (rep.cls) {
    os << "class:\n";
    os << "  porteous: " << rep.cls->porteous.str() << "\n";
    os << "  minus_chern: " << rep.cls->minus_chern.str() << "\n";
    os << "  agree: " << (rep.cls->agree ? "true" : "false") << "\n";
    if (!rep.cls->agree)
      os << "  difference: " << rep.cls->difference.str() << "\n";
    os << "discrepancies:\n";
    for (const auto& note : rep.cls->discrepancies) os << "  - " << note << "\n";
  } else {
    os << "class: not computed (codimension 2g-s-1 = " << rep.codim
       << " is not positive)\n";
  }
  return os.str();
}

int cmd_class(int g, int d, int s, int truncate, const OutputOptions& opts) {
  Scenario sc = make_scenario(g, d, s, truncate);
  StratumReport rep =
      expected_codimension(sc) >= 1 ? brill_noether_class(sc) : basic_report(sc);
  if (opts.format == "json")
    emit(opts, report_json(rep).dump(2) + "\n");
  else
    emit(opts, render_report_text(rep));
  return kOk;
}

int cmd_lab_survey(int d, int trials, std::uint64_t seed, int bound, int jobs,
                   const OutputOptions& opts) {
  auto counts = survey(d, trials, seed, bound, jobs);
  if (opts.format == "json") {
    emit(opts, survey_json(d, trials, counts).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "lab survey: degree=" << d << " trials=" << trials
       << " seed=" << seed << " bound=" << bound << "\n";
    for (const auto& [st, n] : counts)
      os << "  " << splitting_key(st) << ": " << n << "\n";
    emit(opts, os.str());
  }
  return kOk;
}

int cmd_lab_dim(int d, int a, const OutputOptions& opts) {
  StratumDim sd = stratum_dimension(d, a);
  if (opts.format == "json") {
    emit(opts, stratum_dim_json(d, a, sd).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "stratum dimension: degree=" << d << " a=" << a << "\n";
    os << "  formula: " << sd.formula << "\n";
    os << "  lab: " << sd.lab << "\n";
    os << "  agree: " << (sd.agree ? "true" : "false") << "\n";
    emit(opts, os.str());
  }
  return kOk;
}

int cmd_lab_sample(int d, std::uint64_t seed, int bound,
                   const OutputOptions& opts) {
  KernelMatrix k = sample_kernel(d, seed, bound);
  SplittingType st = splitting_type(k);
  if (opts.format == "json") {
    Json j = kernel_json(k);
    j["splitting"] = splitting_key(st);
    j["segre"] = segre_p1(k);
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "lab sample: degree=" << d << " seed=" << seed << " bound=" << bound
       << "\n";
    os << "  col_degrees: (" << k.col_degrees[0] << "," << k.col_degrees[1]
       << ")\n";
    for (int i = 0; i < 4; ++i) {
      os << "  row " << i << ":";
      for (int c = 0; c < 2; ++c) {
        os << " [";
        for (int u = 0; u <= k.entry[i][c].degree; ++u) {
          if (u) os << " ";
          os << rational_str(k.entry[i][c].coeffs[u]);
        }
        os << "]";
      }
      os << "\n";
    }
    os << "  splitting: " << splitting_key(st) << "\n";
    os << "  segre: " << segre_p1(k) << "\n";
    emit(opts, os.str());
  }
  return kOk;
}

int cmd_verify(const OutputOptions& opts) {
  std::vector<CriterionResult> results = run_primary_criteria();
  if (opts.format == "json") {
    Json j = criteria_json(results);
    j["ledger"] = ledger_json();
    emit(opts, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "acceptance criteria:\n";
    int passed = 0;
    for (const auto& r : results) {
      os << "  [" << r.id << "] " << (r.passed ? "PASS" : "FAIL") << " "
         << r.name << " -- " << r.detail << "\n";
      if (r.passed) ++passed;
    }
    os << "discrepancy ledger (informational):\n";
    for (const auto& e : reference_ledger()) {
      os << "  [" << e.id << "]\n";
      os << "    printed: " << e.printed << "\n";
      os << "    engine:  " << e.engine << "\n";
      if (!e.note.empty()) os << "    note:    " << e.note << "\n";
    }
    os << "result: " << (all_passed(results) ? "PASS" : "FAIL") << " ("
       << passed << "/" << results.size() << ")\n";
    emit(opts, os.str());
  }
  return all_passed(results) ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "quotbn: exact fundamental classes of Brill-Noether strata in Quot "
      "schemes of maps to G(2,4), plus a genus-0 splitting-type lab"};
  app.require_subcommand(1);

  OutputOptions opts;

  int g = 1, d = 0, s = 0, a = 0;
  int truncate = -1;
  int trials = 100, bound = 10, jobs = 1;
  std::uint64_t seed = 0;

  CLI::App* cls = app.add_subcommand(
      "class", "compute the fundamental class of a stratum");
  cls->add_option("--genus", g, "curve genus, >= 1")->required();
  cls->add_option("--degree", d, "map degree")->required();
  cls->add_option("--segre", s, "Segre invariant, s = d (mod 2)")->required();
  cls->add_option("--truncate", truncate, "ring truncation override");
  add_output_flags(cls, opts);

  CLI::App* lab =
      app.add_subcommand("lab", "exact genus-0 splitting-type laboratory");
  lab->require_subcommand(1);

  CLI::App* lab_survey = lab->add_subcommand(
      "survey", "splitting-type frequencies over random kernels");
  lab_survey->add_option("--degree", d, "map degree, <= 12")
      ->required()
      ->check(CLI::Range(0, 12));
  lab_survey->add_option("--trials", trials, "number of samples");
  lab_survey->add_option("--seed", seed, "RNG seed");
  lab_survey->add_option("--bound", bound, "coefficient bound");
  lab_survey->add_option("--jobs", jobs, "parallel workers");
  add_output_flags(lab_survey, opts);

  CLI::App* lab_dim = lab->add_subcommand(
      "dim", "stratum dimension: formula vs lab parameter count");
  lab_dim->add_option("--degree", d, "map degree")->required();
  lab_dim->add_option("--a", a, "splitting value, 0 <= a <= d/2")->required();
  add_output_flags(lab_dim, opts);

  CLI::App* lab_sample =
      lab->add_subcommand("sample", "draw one valid kernel matrix");
  lab_sample->add_option("--degree", d, "map degree")->required();
  lab_sample->add_option("--seed", seed, "RNG seed");
  lab_sample->add_option("--bound", bound, "coefficient bound");
  add_output_flags(lab_sample, opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the acceptance checks and print the discrepancy ledger");
  add_output_flags(verify, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParameterError;
  }

  try {
    if (cls->parsed()) return cmd_class(g, d, s, truncate, opts);
    if (lab_survey->parsed())
      return cmd_lab_survey(d, trials, seed, bound, jobs, opts);
    if (lab_dim->parsed()) return cmd_lab_dim(d, a, opts);
    if (lab_sample->parsed()) return cmd_lab_sample(d, seed, bound, opts);
    if (verify->parsed()) return cmd_verify(opts);
  } catch (const SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return kSamplingError;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const Error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kParameterError;
}
