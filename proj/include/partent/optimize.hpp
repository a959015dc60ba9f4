#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "partent/state.hpp"
#include "partent/tolerances.hpp"

namespace partent {

struct NelderMeadOptions {
  int max_iters = 2000;
  double initial_step = 0.25;
  double diameter_tol = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value;
  int iterations;
  bool converged;  // simplex diameter fell below diameter_tol
};

// Minimizes `f` with the standard reflection/expansion/contraction/shrink
// coefficients (1, 2, 1/2, 1/2). `on_iteration(iter, best_value)` is called
// after every iteration when set.
NelderMeadResult nelder_mead_minimize(
    const std::function<double(std::span<const double>)>& f, std::vector<double> start,
    const NelderMeadOptions& options = {},
    const std::function<void(int, double)>& on_iteration = {});

// Builds the state on `pattern` from interleaved (re, im) pairs, one pair per
// support index. The vector is normalized and rotated so the first amplitude
// is real and nonnegative.
PureState state_from_params(std::span<const double> raw_params, const SupportPattern& pattern);

// eta of state_from_params(raw_params, pattern). Throws EmptyState on an
// all-zero vector.
double eta_objective(std::span<const double> raw_params, const SupportPattern& pattern,
                     const Tolerances& tol = {});

// Best-so-far value of the ascent objective (mean single-particle entropy)
// within one restart; recorded whenever it improves.
struct HistorySample {
  int restart;
  int iteration;
  double eta;
};

struct OptimizationResult {
  PureState best_state;
  double best_eta;
  int restarts_used;
  bool converged;
  std::vector<HistorySample> history;
};

struct MaximizeOptions {
  int restarts = 16;
  int max_iters = 2000;
  std::uint64_t seed = 0;
};

inline constexpr int kMaxOptimizeParticles = 8;

// Multi-start Nelder-Mead ascent of the mean single-particle entropy over
// amplitudes on `pattern`; the reported best_eta applies the full zero
// branch. Throws Infeasible when no restart reaches a nonzero eta.
OptimizationResult maximize_eta(const SupportPattern& pattern, const MaximizeOptions& options = {},
                                const Tolerances& tol = {});

}  // namespace partent
