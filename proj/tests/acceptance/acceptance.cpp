// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "partent/entropy.hpp"
#include "partent/optimize.hpp"
#include "partent/table1.hpp"

using namespace partent;

namespace {

constexpr double kWEntropy = 0.918296;
constexpr double kZero = 1e-9;

struct Outcome {
  bool pass;
  std::string detail;
};

SubsetMask mask(int n, std::initializer_list<int> particles) {
  return SubsetMask::from_particles(n, std::vector<int>(particles));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

Outcome table1_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const auto rows = reproduce_table1(5, 1);
  const double elapsed = seconds_since(start);
  const auto summary = summarize_table1(rows);
  bool r127 = false, r123 = false;
  for (const auto& r : rows) {
    if (r.pattern_label == "127") r127 = r.category == Table1Case::I;
    if (r.pattern_label == "123") r123 = r.category == Table1Case::II;
  }
  const bool pass = summary.matches_reference() && r127 && r123 && elapsed < 10.0;
  return {pass, "case I " + std::to_string(summary.case_one) + ", case II " +
                    std::to_string(summary.case_two) + ", mismatches " +
                    std::to_string(summary.mismatches.size()) + fmt(", %.2f s", elapsed)};
}

Outcome w_family_maximum() {
  const std::vector<std::string> bits{"000", "110", "101"};
  MaximizeOptions options;
  options.restarts = 16;
  options.seed = 1;
  const auto start = std::chrono::steady_clock::now();
  const auto result = maximize_eta(SupportPattern::from_bitstrings(bits), options);
  const double elapsed = seconds_since(start);
  double worst_mag = 0.0;
  for (const auto& t : result.best_state.terms()) {
    worst_mag = std::max(worst_mag, std::abs(std::abs(t.amplitude) - 1.0 / std::sqrt(3.0)));
  }
  const bool pass = std::abs(result.best_eta - kWEntropy) <= 1e-4 && worst_mag <= 1e-3 &&
                    result.best_state.support().size() == 3 && elapsed < 30.0;
  return {pass, fmt("best_eta %.7f, max |amp - 1/sqrt3| %.2e", result.best_eta, worst_mag) +
                    fmt(", %.2f s", elapsed)};
}

Outcome ghz_check() {
  const auto ghz = ghz_state(3);
  const double eta = eta_measure(ghz);
  const auto singles = full_report(ghz).single_particle();
  double worst = std::abs(eta - 1.0);
  for (double s : singles) worst = std::max(worst, std::abs(s - 1.0));
  return {worst <= 1e-10, fmt("eta %.12f, max deviation %.2e", eta, worst)};
}

Outcome closed_form_127() {
  const std::vector<std::string> bits{"000", "110", "010"};
  const auto pattern = SupportPattern::from_bitstrings(bits);
  double worst_spec = 0.0, worst_zero = 0.0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = random_on_support(pattern, 0.05, seed);
    const double a2 = std::norm(s.amplitude("000"));
    const double b2 = std::norm(s.amplitude("110"));
    const double root = std::sqrt(1.0 - 4.0 * a2 * b2);
    const auto spec = reduced_spectrum(s, mask(3, {1, 3}));
    worst_spec = std::max({worst_spec, std::abs(spec[0]), std::abs(spec[1]),
                           std::abs(spec[2] - 0.5 * (1.0 - root)),
                           std::abs(spec[3] - 0.5 * (1.0 + root))});
    const auto report = full_report(s);
    worst_zero = std::max({worst_zero, report.at(mask(3, {1, 2})), report.at(mask(3, {3}))});
  }
  return {worst_spec <= 1e-10 && worst_zero <= kZero,
          fmt("max spectrum error %.2e, max S(12)/S(3) %.2e", worst_spec, worst_zero)};
}

Outcome closed_form_123() {
  const std::vector<std::string> bits{"000", "110", "101"};
  const auto pattern = SupportPattern::from_bitstrings(bits);
  double worst_spec = 0.0, smallest_entropy = INFINITY;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = random_on_support(pattern, 0.05, 10'000 + seed);
    const double a2 = std::norm(s.amplitude("000"));
    const double b2 = std::norm(s.amplitude("110"));
    const double g2 = std::norm(s.amplitude("101"));
    const std::vector<std::pair<int, std::pair<double, double>>> expected{
        {1, {a2, b2 + g2}}, {2, {b2, a2 + g2}}, {3, {a2 + b2, g2}}};
    for (const auto& [particle, pair] : expected) {
      const auto spec = reduced_spectrum(s, SubsetMask::from_particles(3, std::vector<int>{particle}));
      const double lo = std::min(pair.first, pair.second), hi = std::max(pair.first, pair.second);
      worst_spec = std::max({worst_spec, std::abs(spec[0] - lo), std::abs(spec[1] - hi)});
    }
    for (const auto& e : full_report(s).entries()) smallest_entropy = std::min(smallest_entropy, e.entropy);
  }
  return {worst_spec <= 1e-10 && smallest_entropy > kZero,
          fmt("max spectrum error %.2e, min entropy %.3e", worst_spec, smallest_entropy)};
}

Outcome complement_symmetry() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  int states = 0;
  for (int trial = 0; trial < 504; ++trial) {
    const int n = 2 + trial % 7;
    const auto s = random_state(n, rng());
    const auto report = full_report(s, SubsetScope::AllProper);
    for (const auto& e : report.entries()) {
      worst = std::max(worst, std::abs(e.entropy - report.at(e.kept.complement())));
    }
    ++states;
  }
  return {worst <= 1e-9, std::to_string(states) + fmt(" states, max |S(A) - S(~A)| %.2e", worst)};
}

Outcome local_unitary_invariance() {
  std::mt19937_64 rng(7);
  double worst_eta = 0.0, worst_entropy = 0.0;
  int pairs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = trial % 3 == 0 ? testing::random_structured_state(n, rng).state
                                  : random_state(n, rng());
    const auto moved = testing::apply_all_local(s, testing::random_local_unitaries(n, rng));
    const auto before = full_report(s);
    const auto after = full_report(moved);
    worst_eta = std::max(worst_eta, std::abs(eta_from_report(before) - eta_from_report(after)));
    for (std::size_t k = 0; k < before.entries().size(); ++k) {
      worst_entropy =
          std::max(worst_entropy, std::abs(before.entries()[k].entropy - after.entries()[k].entropy));
    }
    ++pairs;
  }
  return {worst_eta <= 1e-8 && worst_entropy <= 1e-8,
          std::to_string(pairs) + fmt(" pairs, max |d eta| %.2e, max |dS| %.2e", worst_eta, worst_entropy)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(8);
  int disagreements = 0, cuts = 0, zero_cuts = 0;
  for (int trial = 0; trial < 520; ++trial) {
    const int n = 2 + trial % 5;
    const auto s = trial % 4 == 0 ? random_state(n, rng()) : testing::random_structured_state(n, rng).state;
    const auto report = full_report(s, SubsetScope::AllProper);
    for (const auto& e : report.entries()) {
      const bool zero = e.entropy <= kZero;
      zero_cuts += zero;
      disagreements += zero != factorization_oracle(s, e.kept);
      ++cuts;
    }
  }
  return {disagreements == 0 && zero_cuts > 0,
          std::to_string(cuts) + " cuts (" + std::to_string(zero_cuts) + " separable), " +
              std::to_string(disagreements) + " disagreements"};
}

Outcome two_particle_reduction() {
  double worst_eta = 0.0, worst_sym = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = random_state(2, 500 + seed);
    // Bipartite entropy from the brute-force one-particle reduction.
    std::vector<oracle::cd> psi(s.amplitudes().begin(), s.amplitudes().end());
    const double bipartite = oracle::entropy_bits(oracle::eig2(oracle::brute_reduced(psi, 2, {1})));
    const auto report = full_report(s, SubsetScope::AllProper);
    worst_eta = std::max(worst_eta, std::abs(eta_measure(s) - bipartite));
    worst_sym = std::max(worst_sym, std::abs(report.at(mask(2, {1})) - report.at(mask(2, {2}))));
  }
  return {worst_eta <= 1e-10 && worst_sym <= 1e-10,
          fmt("max |eta - S| %.2e, max |S1 - S2| %.2e", worst_eta, worst_sym)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 table1 reproduction", table1_reproduction},
      {"2 W-family maximum", w_family_maximum},
      {"3 GHZ entropies", ghz_check},
      {"4 |127> closed form", closed_form_127},
      {"5 |123> closed form", closed_form_123},
      {"6 complement symmetry", complement_symmetry},
      {"7 local-unitary invariance", local_unitary_invariance},
      {"8 oracle equivalence", oracle_equivalence},
      {"9 two-particle reduction", two_particle_reduction},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
