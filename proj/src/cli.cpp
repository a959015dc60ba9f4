#include "partent/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "partent/entropy.hpp"
#include "partent/errors.hpp"
#include "partent/optimize.hpp"
#include "partent/serialize.hpp"
#include "partent/table1.hpp"

namespace partent::cli {

namespace {

enum class Format { Json, Text };

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string partition_text(const Partition& partition) {
  std::string out;
  for (const auto& block : partition) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

void print_report_text(const Classification& c, bool with_entropies, std::ostream& out) {
  out << "n: " << c.report.n_particles() << '\n';
  if (with_entropies) {
    for (const auto& e : c.report.entries()) {
      out << "S(" << e.kept.label() << "): " << fixed6(e.entropy) << '\n';
    }
  }
  out << "eta: " << fixed6(c.eta) << '\n';
  out << "verdict: " << to_string(c.verdict) << '\n';
  out << "partition: " << partition_text(c.partition) << '\n';
}

void print_state_text(const PureState& state, std::ostream& out) {
  out << "n: " << state.n_particles() << '\n';
  for (const auto& t : state.terms()) {
    out << t.bitstring << ' ' << t.amplitude.real() << ' ' << t.amplitude.imag() << '\n';
  }
}

void warn_if_large(const PureState& state, SubsetScope scope, std::ostream& err) {
  const int n = state.n_particles();
  const int largest = scope == SubsetScope::AllProper ? n - 1 : n / 2;
  if (largest > kLargeReductionParticles) {
    err << "warning: reductions of up to " << largest << " particles (matrix dimension 2^"
        << largest << ") exceed 2^" << kLargeReductionParticles
        << "; the dense eigensolver will be slow\n";
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial-entropy entanglement analysis of multi-qubit pure states", "partent"};
  app.require_subcommand(1);

  Tolerances tol;
  std::optional<std::string> format_flag;
  app.add_option("--tolerance", tol.zero, "Zero-entropy threshold in bits")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_flag, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string state_path;
  bool all_subsets = false;
  auto* entropies = app.add_subcommand("entropies", "Partial entropies of every proper subset");
  entropies->add_option("state", state_path, "State file (JSON)")->required();
  entropies->add_flag("--all-subsets", all_subsets,
                      "Diagonalize every subset instead of one side of each bipartition");

  auto* eta = app.add_subcommand("eta", "Genuine-entanglement measure eta");
  eta->add_option("state", state_path, "State file (JSON)")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Verdict and finest separable partition");
  classify_cmd->add_option("state", state_path, "State file (JSON)")->required();

  std::vector<std::string> support;
  MaximizeOptions maximize_options;
  auto* maximize = app.add_subcommand("maximize", "Maximize eta over amplitudes on a support");
  maximize->add_option("--support", support, "Basis bitstrings, comma separated")
      ->required()
      ->delimiter(',');
  maximize->add_option("--restarts", maximize_options.restarts, "Multi-start count")
      ->check(CLI::PositiveNumber);
  maximize->add_option("--max-iters", maximize_options.max_iters, "Iterations per restart")
      ->check(CLI::PositiveNumber);
  maximize->add_option("--seed", maximize_options.seed, "Random seed");

  int trials = 5;
  std::uint64_t table_seed = 1;
  auto* table = app.add_subcommand("table1", "Classify all 56 three-term three-qubit supports");
  table->add_option("--trials", trials, "Random states per support")->check(CLI::Range(3, 1000));
  table->add_option("--seed", table_seed, "Random seed");

  int random_n = 3;
  std::uint64_t random_seed = 0;
  auto* random = app.add_subcommand("random", "Emit a random state file");
  random->add_option("--n", random_n, "Number of particles")->required();
  random->add_option("--seed", random_seed, "Random seed")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformedInput;
  }

  // Commands that emit files default to JSON, the rest to text.
  const bool file_like = entropies->parsed() || random->parsed();
  const Format format = format_flag ? (*format_flag == "json" ? Format::Json : Format::Text)
                                    : (file_like ? Format::Json : Format::Text);

  try {
    if (entropies->parsed()) {
      const auto state = read_state_file(state_path);
      const auto scope = all_subsets ? SubsetScope::AllProper : SubsetScope::SymmetryCompleted;
      warn_if_large(state, scope, err);
      auto c = classify(state, tol);
      if (all_subsets) c.report = full_report(state, scope, tol);
      if (format == Format::Json) {
        out << report_to_json(c).dump(2) << '\n';
      } else {
        print_report_text(c, true, out);
      }
    } else if (eta->parsed()) {
      const auto state = read_state_file(state_path);
      warn_if_large(state, SubsetScope::SymmetryCompleted, err);
      const double value = eta_measure(state, tol);
      if (format == Format::Json) {
        out << nlohmann::json{{"eta", value}}.dump() << '\n';
      } else {
        out << fixed6(value) << '\n';
      }
    } else if (classify_cmd->parsed()) {
      const auto state = read_state_file(state_path);
      warn_if_large(state, SubsetScope::SymmetryCompleted, err);
      const auto c = classify(state, tol);
      if (format == Format::Json) {
        out << nlohmann::json{{"verdict", to_string(c.verdict)},
                              {"eta", c.eta},
                              {"partition", c.partition}}
                   .dump(2)
            << '\n';
      } else {
        print_report_text(c, false, out);
      }
    } else if (maximize->parsed()) {
      SupportPattern pattern = [&] {
        try {
          return SupportPattern::from_bitstrings(support);
        } catch (const Error& e) {
          throw ParseError(std::string("bad --support: ") + e.what());
        }
      }();
      const auto result = maximize_eta(pattern, maximize_options, tol);
      if (format == Format::Json) {
        out << optimization_to_json(result).dump(2) << '\n';
      } else {
        out << "best_eta: " << fixed6(result.best_eta) << '\n';
        out << "converged: " << (result.converged ? "true" : "false") << '\n';
        out << "restarts_used: " << result.restarts_used << '\n';
        for (const auto& t : result.best_state.terms()) {
          out << t.bitstring << ' ' << fixed6(std::abs(t.amplitude)) << ' '
              << fixed6(std::arg(t.amplitude)) << '\n';
        }
      }
    } else if (table->parsed()) {
      const auto rows = reproduce_table1(trials, table_seed, tol);
      const auto summary = summarize_table1(rows);
      if (format == Format::Json) {
        nlohmann::json doc;
        doc["rows"] = nlohmann::json::array();
        for (const auto& r : rows) {
          doc["rows"].push_back({{"pattern", r.pattern_label},
                                 {"support", r.support.bitstrings()},
                                 {"case", to_string(r.category)},
                                 {"partition", r.witness_partition}});
        }
        doc["case_I"] = summary.case_one;
        doc["case_II"] = summary.case_two;
        doc["mismatches"] = summary.mismatches;
        doc["matches_reference"] = summary.matches_reference();
        out << doc.dump(2) << '\n';
      } else {
        for (const auto& r : rows) {
          out << '|' << r.pattern_label << "> case " << to_string(r.category) << ' '
              << partition_text(r.witness_partition) << '\n';
        }
        out << "Case I: " << summary.case_one << ", Case II: " << summary.case_two << '\n';
        for (const auto& m : summary.mismatches) out << "mismatch: |" << m << ">\n";
      }
      return summary.matches_reference() ? kOk : kTableMismatch;
    } else if (random->parsed()) {
      const auto state = random_state(random_n, random_seed);
      if (format == Format::Json) {
        out << state_to_json(state).dump(2) << '\n';
      } else {
        print_state_text(state, out);
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const FactorExtractionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const ClassificationUnstable& e) {
    err << "error: " << e.what() << '\n';
    return kTableMismatch;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
  return kOk;
}

}  // namespace partent::cli
