#include "qgc/grover.hpp"

#include "qgc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qgc {

namespace {

double l2_norm(const std::vector<double>& v) {
  // Compensated summation; the drift being measured is ~1e-16.
  double sum = 0.0;
  double carry = 0.0;
  for (double x : v) {
    const double y = x * x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return std::sqrt(sum);
}

double mean(const std::vector<double>& v) {
  double sum = 0.0;
  double carry = 0.0;
  for (double x : v) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(v.size());
}

}  // namespace

double solve_n(std::int64_t q) {
  if (q < 0) throw Error(ErrorKind::InvalidParams, "solve_n requires q >= 0, got " + std::to_string(q));
  const double s = std::sin(std::numbers::pi / (2.0 * (2.0 * static_cast<double>(q) + 1.0)));
  return 1.0 / (s * s);
}

double solve_q(double n) {
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::InvalidParams, "solve_q requires finite n >= 1, got " + std::to_string(n));
  }
  return (std::numbers::pi / (2.0 * std::asin(1.0 / std::sqrt(n))) - 1.0) / 2.0;
}

double success_probability(std::int64_t n, std::int64_t q) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "success_probability requires n >= 2");
  if (q < 0) throw Error(ErrorKind::InvalidParams, "success_probability requires q >= 0");
  const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
  const double s = std::sin((2.0 * static_cast<double>(q) + 1.0) * theta);
  return s * s;
}

GroverRun simulate(std::int64_t n, std::int64_t q, std::int64_t marked, SimulationLimits limits) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "simulate requires n >= 2, got " + std::to_string(n));
  if (q < 0) throw Error(ErrorKind::InvalidParams, "simulate requires q >= 0, got " + std::to_string(q));
  if (marked < 0 || marked >= n) {
    throw Error(ErrorKind::InvalidParams,
                "marked index " + std::to_string(marked) + " outside 0.." + std::to_string(n - 1));
  }
  if (n > limits.max_n) {
    throw Error(ErrorKind::CapacityExceeded,
                "n = " + std::to_string(n) + " exceeds simulator cap " + std::to_string(limits.max_n));
  }
  if (q > limits.max_iterations) {
    throw Error(ErrorKind::CapacityExceeded, "q = " + std::to_string(q) + " exceeds iteration cap " +
                                                 std::to_string(limits.max_iterations));
  }

  GroverRun run;
  run.n = n;
  run.marked = marked;
  run.amplitudes.assign(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  run.marked_probability.reserve(static_cast<std::size_t>(q) + 1);

  const auto m = static_cast<std::size_t>(marked);
  auto record = [&run, m] {
    run.marked_probability.push_back(run.amplitudes[m] * run.amplitudes[m]);
    run.max_norm_drift = std::max(run.max_norm_drift, std::abs(l2_norm(run.amplitudes) - 1.0));
  };
  record();

  for (std::int64_t it = 0; it < q; ++it) {
    run.amplitudes[m] = -run.amplitudes[m];
    const double twice_mean = 2.0 * mean(run.amplitudes);
    for (auto& a : run.amplitudes) a = twice_mean - a;
    ++run.iterations_applied;
    record();
  }
  return run;
}

}  // namespace qgc
