#include "partent/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "parallel.hpp"
#include "partent/entropy.hpp"
#include "partent/errors.hpp"

namespace partent {

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> start, const NelderMeadOptions& options,
                                      const std::function<void(int, double)>& on_iteration) {
  const std::size_t d = start.size();
  if (d == 0) return {start, f(start), 0, true};

  std::vector<std::vector<double>> pts(d + 1, start);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += options.initial_step;
  std::vector<double> vals(d + 1);
  for (std::size_t i = 0; i <= d; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(d + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2;
    std::vector<double> v2;
    p2.reserve(d + 1);
    v2.reserve(d + 1);
    for (auto i : order) {
      p2.push_back(std::move(pts[i]));
      v2.push_back(vals[i]);
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  auto diameter = [&] {
    double worst = 0.0;
    for (std::size_t i = 1; i <= d; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += (pts[i][j] - pts[0][j]) * (pts[i][j] - pts[0][j]);
      worst = std::max(worst, std::sqrt(s));
    }
    return worst;
  };
  auto along = [&](const std::vector<double>& from, const std::vector<double>& to, double t) {
    std::vector<double> out(d);
    for (std::size_t j = 0; j < d; ++j) out[j] = from[j] + t * (to[j] - from[j]);
    return out;
  };

  int iter = 0;
  bool converged = false;
  sort_simplex();
  while (iter < options.max_iters) {
    if (diameter() < options.diameter_tol) {
      converged = true;
      break;
    }
    ++iter;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) centroid[j] += pts[i][j] / static_cast<double>(d);

    const auto& worst = pts[d];
    auto xr = along(centroid, worst, -1.0);
    const double fr = f(xr);

    if (fr < vals[0]) {
      auto xe = along(centroid, worst, -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[d] = std::move(xe);
        vals[d] = fe;
      } else {
        pts[d] = std::move(xr);
        vals[d] = fr;
      }
    } else if (fr < vals[d - 1]) {
      pts[d] = std::move(xr);
      vals[d] = fr;
    } else {
      const bool outside = fr < vals[d];
      auto xc = outside ? along(centroid, xr, 0.5) : along(centroid, worst, 0.5);
      const double fc = f(xc);
      if (outside ? fc <= fr : fc < vals[d]) {
        pts[d] = std::move(xc);
        vals[d] = fc;
      } else {
        for (std::size_t i = 1; i <= d; ++i) {
          pts[i] = along(pts[0], pts[i], 0.5);
          vals[i] = f(pts[i]);
        }
      }
    }
    sort_simplex();
    if (on_iteration) on_iteration(iter, vals[0]);
  }
  return {pts[0], vals[0], iter, converged};
}

PureState state_from_params(std::span<const double> raw_params, const SupportPattern& pattern) {
  if (raw_params.size() != 2 * pattern.size()) {
    throw DimensionMismatch("expected " + std::to_string(2 * pattern.size()) +
                            " parameters, got " + std::to_string(raw_params.size()));
  }
  std::vector<Complex> amplitudes(std::size_t{1} << pattern.n_particles());
  Complex phase{1.0, 0.0};
  const Complex first{raw_params[0], raw_params[1]};
  if (std::abs(first) > 0.0) phase = std::conj(first) / std::abs(first);
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    amplitudes[pattern.indices()[k]] = phase * Complex{raw_params[2 * k], raw_params[2 * k + 1]};
  }
  amplitudes[pattern.indices()[0]] = std::abs(first);
  return PureState::from_amplitudes(pattern.n_particles(), std::move(amplitudes));
}

double eta_objective(std::span<const double> raw_params, const SupportPattern& pattern,
                     const Tolerances& tol) {
  return eta_measure(state_from_params(raw_params, pattern), tol);
}

namespace {

// Ascent coordinates: the first support amplitude is pinned to 1 and the
// remaining ones are free complex numbers, which removes the norm and global
// phase directions from the search.
std::vector<double> chart_to_raw(std::span<const double> chart) {
  std::vector<double> raw{1.0, 0.0};
  raw.insert(raw.end(), chart.begin(), chart.end());
  return raw;
}

struct RestartOutcome {
  std::vector<double> raw;
  double eta = 0.0;
  bool converged = false;
  int iterations = 0;
  std::vector<std::pair<int, double>> trace;  // (iteration, best eta so far)
};

RestartOutcome run_restart(const SupportPattern& pattern, std::uint64_t seed, int max_iters,
                           const Tolerances& tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> draw(pattern.size());
  do {
    for (auto& z : draw) z = {normal(rng), normal(rng)};
  } while (std::abs(draw[0]) < 1e-3);

  std::vector<double> start;
  for (std::size_t k = 1; k < draw.size(); ++k) {
    const Complex ratio = draw[k] / draw[0];
    start.push_back(ratio.real());
    start.push_back(ratio.imag());
  }

  auto objective = [&](std::span<const double> chart) {
    const auto raw = chart_to_raw(chart);
    return -mean_single_particle_entropy(state_from_params(raw, pattern), tol);
  };

  RestartOutcome out;
  double best_seen = -1.0;
  auto on_iteration = [&](int iter, double value) {
    if (-value > best_seen + 1e-15) {
      best_seen = -value;
      out.trace.emplace_back(iter, best_seen);
    }
  };
  NelderMeadOptions options;
  options.max_iters = max_iters;
  const auto nm = nelder_mead_minimize(objective, start, options, on_iteration);

  out.raw = chart_to_raw(nm.x);
  out.eta = eta_objective(out.raw, pattern, tol);
  out.converged = nm.converged;
  out.iterations = nm.iterations;
  return out;
}

}  // namespace

OptimizationResult maximize_eta(const SupportPattern& pattern, const MaximizeOptions& options,
                                const Tolerances& tol) {
  if (options.restarts < 1) throw DimensionMismatch("restarts must be at least 1");
  if (options.max_iters < 1) throw DimensionMismatch("max_iters must be at least 1");
  if (pattern.n_particles() < 2) throw DimensionMismatch("eta needs at least 2 particles");
  if (pattern.n_particles() > kMaxOptimizeParticles) {
    throw Unsupported("optimization is limited to " + std::to_string(kMaxOptimizeParticles) +
                      " particles");
  }

  std::mt19937_64 seeder(options.seed);
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(options.restarts));
  for (auto& s : seeds) s = seeder();

  std::vector<RestartOutcome> outcomes(seeds.size());
  detail::parallel_for(
      seeds.size(),
      [&](std::size_t r) { outcomes[r] = run_restart(pattern, seeds[r], options.max_iters, tol); },
      2);

  // Highest eta wins; the lowest restart index breaks ties.
  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].eta > outcomes[best].eta) best = r;
  }
  if (!(outcomes[best].eta > 0.0)) {
    throw Infeasible("eta vanishes on every restart: the support forces a separable state");
  }

  std::vector<HistorySample> history;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    for (const auto& [iter, value] : outcomes[r].trace) {
      history.push_back({static_cast<int>(r), iter, value});
    }
  }

  return {state_from_params(outcomes[best].raw, pattern), outcomes[best].eta, options.restarts,
          outcomes[best].converged, std::move(history)};
}

}  // namespace partent
