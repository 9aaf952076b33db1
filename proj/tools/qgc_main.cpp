// qgc: command-line front end for codon counting, genetic-code symmetry
// analysis, Grover query numerics and uncertainty-energy estimates.
//
// Exit codes: 0 success, 2 invalid input or parse error, 3 capacity exceeded.

#include "qgc/codon.hpp"
#include "qgc/error.hpp"
#include "qgc/report.hpp"
#include "qgc/symmetry.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qgc::Error(qgc::ErrorKind::InvalidParams, "cannot open table file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    std::cerr << "qgc: cannot write '" << output_path << "'\n";
    return kExitInvalid;
  }
  out << text;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codon multiset counting, genetic-code symmetry analysis, Grover numerics"};
  app.name("qgc");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file mirroring the command-line flags; flags win");

  std::string format_name = "text";
  std::string output_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", output_path, "Write the report here instead of stdout");

  // count
  auto* count = app.add_subcommand("count", "Count ordered words and multiset classes");
  qgc::CountParams count_params;
  std::uint64_t cap = qgc::kDefaultEnumerationCap;
  bool no_enumerate = false;
  count->add_option("--k", count_params.k, "Alphabet size")->capture_default_str();
  count->add_option("--r", count_params.r, "Word length")->capture_default_str();
  count->add_option("--cap", cap, "Maximum number of classes to enumerate")->capture_default_str();
  count->add_flag("--no-enumerate", no_enumerate, "Report the counts only");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Multiset-class and prefix analysis of a genetic code");
  std::string builtin_name;
  std::string table_path;
  auto* source = analyze->add_option_group("source", "Table source");
  source->add_option("--builtin", builtin_name, "Built-in code: standard (or 1)");
  source->add_option("--table", table_path, "Path to a translation table file");
  source->require_option(1);

  // grover
  auto* grover = app.add_subcommand("grover", "Grover query relation and simulation");
  grover->require_subcommand(1);
  std::int64_t solve_n_q = 3;
  auto* solve_n = grover->add_subcommand("solve-n", "Database size reached with probability one in q queries");
  solve_n->add_option("--q", solve_n_q, "Query count")->capture_default_str();
  double solve_q_n = 20.0;
  auto* solve_q = grover->add_subcommand("solve-q", "Real-valued query count for database size n");
  solve_q->add_option("--n", solve_q_n, "Database size")->capture_default_str();
  std::int64_t sim_n = 20;
  std::int64_t sim_q = 3;
  std::int64_t sim_marked = 0;
  qgc::SimulationLimits limits;
  auto* simulate = grover->add_subcommand("simulate", "State-vector simulation");
  simulate->add_option("--n", sim_n, "Database size")->capture_default_str();
  simulate->add_option("--q", sim_q, "Iterations")->capture_default_str();
  simulate->add_option("--marked", sim_marked, "Marked index")->capture_default_str();
  simulate->add_option("--max-n", limits.max_n, "Largest database size to simulate")->capture_default_str();

  // energy
  auto* energy = app.add_subcommand("energy", "Uncertainty-principle momentum and energy estimates (CGS)");
  qgc::PhysicalParams phys;
  double scale = 3.0;
  energy->add_option("--hbar", phys.hbar, "Reduced Planck constant, erg s")->capture_default_str();
  energy->add_option("--delta-x", phys.delta_x, "Length scale, cm")->capture_default_str();
  energy->add_option("--mass", phys.mass, "Particle mass, g")->capture_default_str();
  energy->add_option("--hbond", phys.hbond_energy, "Hydrogen-bond energy, erg")->capture_default_str();
  energy->add_option("--scale", scale, "Length multiplier for the comparison scale")->capture_default_str();

  // synth
  auto* synth = app.add_subcommand("synth", "Emit a seeded synthetic translation table");
  std::uint64_t seed = 1;
  std::string kind_name = "invariant";
  const std::map<std::string, qgc::SyntheticKind> kinds = {
      {"uniform", qgc::SyntheticKind::Uniform},
      {"invariant", qgc::SyntheticKind::MultisetInvariant},
      {"perturbed", qgc::SyntheticKind::Perturbed},
      {"third-base", qgc::SyntheticKind::ThirdBaseDegenerate}};
  synth->add_option("--seed", seed, "Generator seed")->capture_default_str();
  synth->add_option("--kind", kind_name, "Generator kind")
      ->check(CLI::IsMember({"uniform", "invariant", "perturbed", "third-base"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    const auto format = qgc::parse_format(format_name);
    std::string text;
    if (count->parsed()) {
      text = qgc::render(qgc::count_report(count_params, cap, !no_enumerate), format);
    } else if (analyze->parsed()) {
      if (!table_path.empty()) {
        const auto code = qgc::parse_table(read_file(table_path));
        text = qgc::render(qgc::analyze_report(code), format);
      } else {
        text = qgc::render(qgc::analyze_report(qgc::builtin_code(builtin_name)), format);
      }
    } else if (solve_n->parsed()) {
      text = qgc::render(qgc::grover_solve_n_report(solve_n_q), format);
    } else if (solve_q->parsed()) {
      text = qgc::render(qgc::grover_solve_q_report(solve_q_n), format);
    } else if (simulate->parsed()) {
      text = qgc::render(qgc::grover_simulate_report(sim_n, sim_q, sim_marked, limits), format);
    } else if (energy->parsed()) {
      text = qgc::render(qgc::energy_report(phys, scale), format);
    } else if (synth->parsed()) {
      text = qgc::serialize_table(qgc::synthetic_code(seed, kinds.at(kind_name)));
    }
    return emit(text, output_path);
  } catch (const qgc::FormatError& e) {
    std::cerr << "qgc: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const qgc::Error& e) {
    std::cerr << "qgc: " << qgc::to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == qgc::ErrorKind::CapacityExceeded ? kExitCapacity : kExitInvalid;
  }
}
