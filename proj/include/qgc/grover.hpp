#pragma once

// Single-marked-item Grover search: closed-form inversion of the
// probability-one condition (2q + 1) * asin(1 / sqrt(n)) = pi / 2 and a
// real-amplitude state-vector simulator to check it against.

#include <cstdint>
#include <vector>

namespace qgc {

/// Database size for which exactly q iterations reach probability one:
/// 1 / sin^2(pi / (2 (2q + 1))). Throws InvalidParams for q < 0.
double solve_n(std::int64_t q);

/// Real-valued iteration count for database size n (>= 1):
/// (pi / (2 asin(1 / sqrt(n))) - 1) / 2.
double solve_q(double n);

/// sin^2((2q + 1) asin(1 / sqrt(n))). Requires n >= 2 and q >= 0.
double success_probability(std::int64_t n, std::int64_t q);

struct SimulationLimits {
  std::int64_t max_n = std::int64_t{1} << 20;
  std::int64_t max_iterations = std::int64_t{1} << 20;
};

struct GroverRun {
  std::int64_t n = 0;
  std::int64_t marked = 0;
  std::vector<double> amplitudes;
  std::int64_t iterations_applied = 0;
  /// marked_probability[i] after i iterations; size iterations_applied + 1.
  std::vector<double> marked_probability;
  /// Largest |‖a‖₂ - 1| observed over the initial state and every iteration.
  double max_norm_drift = 0.0;

  double final_probability() const { return marked_probability.back(); }
};

/// Starts from the uniform superposition and applies q rounds of
/// (sign flip on `marked`, inversion about the mean). Throws InvalidParams
/// for bad arguments and CapacityExceeded beyond `limits`.
GroverRun simulate(std::int64_t n, std::int64_t q, std::int64_t marked, SimulationLimits limits = {});

}  // namespace qgc
