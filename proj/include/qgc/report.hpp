#pragma once

// Report assembly for the command-line tool. Each report is a JSON document;
// the text and CSV renderings are produced from that document only, so every
// format carries the same values.
//
// Conventions: exact integers from the combinatorics module are emitted as
// decimal strings; floating-point values are rounded to 12 significant
// digits; amino-acid products use one-letter symbols with '*' for Stop.

#include "qgc/codon.hpp"
#include "qgc/combinatorics.hpp"
#include "qgc/grover.hpp"
#include "qgc/physics.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace qgc {

enum class OutputFormat { Text, Json, Csv };

/// "text", "json" or "csv". Throws InvalidParams otherwise.
OutputFormat parse_format(std::string_view name);

struct Report {
  std::string kind;  // "count", "analyze", "grover-solve-n", ...
  nlohmann::ordered_json data;
};

/// Rounds to `digits` significant decimal digits.
double round_sig(double value, int digits = 12);

/// With `enumerate` set, throws CapacityExceeded when the class count is
/// above `cap`; without it only the two counts are reported.
Report count_report(CountParams p, std::uint64_t cap = kDefaultEnumerationCap, bool enumerate = true);
Report analyze_report(const GeneticCode& code);
Report grover_solve_n_report(std::int64_t q);
Report grover_solve_q_report(double n);
Report grover_simulate_report(std::int64_t n, std::int64_t q, std::int64_t marked, SimulationLimits limits = {});
Report energy_report(const PhysicalParams& p, double scale_factor);

std::string render(const Report& report, OutputFormat format);

}  // namespace qgc
