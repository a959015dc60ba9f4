#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "partent/errors.hpp"
#include "partent/reduction.hpp"

using namespace partent;

namespace {

std::vector<std::vector<int>> particle_lists(const std::vector<SubsetMask>& masks) {
  std::vector<std::vector<int>> out;
  for (const auto& m : masks) out.push_back(m.particles());
  return out;
}

SubsetMask mask(int n, std::initializer_list<int> particles) {
  return SubsetMask::from_particles(n, std::vector<int>(particles));
}

PureState state_of(int n, std::initializer_list<BasisTerm> terms) {
  return build_state(std::vector<BasisTerm>(terms), n);
}

}  // namespace

TEST_CASE("SubsetMask basics") {
  const auto m = mask(4, {1, 3});
  CHECK(m.bits() == 0b1010u);
  CHECK(m.size() == 2);
  CHECK(m.label() == "1,3");
  CHECK(m.complement().particles() == std::vector<int>{2, 4});
  CHECK(m.is_proper());
  CHECK_FALSE(SubsetMask::all(4).is_proper());
  CHECK_THROWS_AS(mask(3, {4}), DimensionMismatch);
  CHECK_THROWS_AS(SubsetMask(2, 0b100), DimensionMismatch);
}

TEST_CASE("enumerate_subsets follows lexicographic particle order") {
  CHECK(particle_lists(enumerate_subsets(3, 1)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(particle_lists(enumerate_subsets(3, 2)) == std::vector<std::vector<int>>{{1}, {2}, {3}});
  CHECK(enumerate_subsets(2, 1).size() == 2);
  CHECK(enumerate_subsets(8, 4).size() == 70);
  CHECK_THROWS_AS(enumerate_subsets(3, 0), DimensionMismatch);
  CHECK_THROWS_AS(enumerate_subsets(3, 3), DimensionMismatch);
  CHECK(enumerate_proper_subsets(4).size() == 14);
}

TEST_CASE("partial_trace examples") {
  SUBCASE("product state") {
    const auto rho = partial_trace(state_of(2, {{"00", 1.0}}), mask(2, {1}));
    CHECK(rho(0, 0) == Complex{1.0, 0.0});
    CHECK(rho(1, 1) == Complex{});
    CHECK(rho(0, 1) == Complex{});
  }
  SUBCASE("GHZ(2) is maximally mixed on one particle") {
    const auto rho = partial_trace(ghz_state(2), mask(2, {1}));
    CHECK(std::abs(rho(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(rho(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(rho(0, 1)) < 1e-15);
  }
  SUBCASE("|127> on {1,3} has the closed-form spectrum") {
    const Complex a{0.3, 0.4}, b{-0.5, 0.1}, g{0.2, -0.6};
    const auto s = state_of(3, {{"000", a}, {"110", b}, {"010", g}});
    const double na = std::norm(s.amplitude("000")), nb = std::norm(s.amplitude("110"));
    const double root = std::sqrt(1.0 - 4.0 * na * nb);
    const auto spec = reduced_spectrum(s, mask(3, {1, 3}));
    REQUIRE(spec.size() == 4);
    CHECK(std::abs(spec[0]) < 1e-14);
    CHECK(std::abs(spec[1]) < 1e-14);
    CHECK(std::abs(spec[2] - 0.5 * (1 - root)) < 1e-12);
    CHECK(std::abs(spec[3] - 0.5 * (1 + root)) < 1e-12);
  }
  SUBCASE("invalid masks") {
    const auto s = random_state(3, 1);
    CHECK_THROWS_AS(partial_trace(s, SubsetMask::all(3)), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(s, SubsetMask(3, 0)), DimensionMismatch);
    CHECK_THROWS_AS(partial_trace(s, mask(4, {1})), DimensionMismatch);
  }
}

TEST_CASE("partial_trace agrees with the brute-force reduction") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const auto s = random_state(n, seed);
    std::vector<oracle::cd> psi(s.amplitudes().begin(), s.amplitudes().end());
    for (const auto& m : enumerate_proper_subsets(n)) {
      const auto expected = oracle::brute_reduced(psi, n, m.particles());
      const auto rho = partial_trace(s, m);
      for (std::size_t r = 0; r < rho.dim(); ++r)
        for (std::size_t c = 0; c < rho.dim(); ++c)
          CHECK(std::abs(rho(r, c) - expected[r][c]) < 1e-14);
    }
  }
}

TEST_CASE("reduced_spectrum examples") {
  SUBCASE("|123> keep {1}") {
    const Complex a{0.1, 0.7}, b{0.5, -0.2}, g{-0.3, 0.3};
    const auto s = state_of(3, {{"000", a}, {"110", b}, {"101", g}});
    const double na = std::norm(s.amplitude("000"));
    auto expected = std::vector<double>{na, 1.0 - na};
    std::sort(expected.begin(), expected.end());
    const auto spec = reduced_spectrum(s, mask(3, {1}));
    CHECK(std::abs(spec[0] - expected[0]) < 1e-12);
    CHECK(std::abs(spec[1] - expected[1]) < 1e-12);
  }
  SUBCASE("equal magnitudes give {1/3, 2/3}") {
    const auto s = w_family_state();
    // Independent route: brute-force reduction then closed-form 2x2 roots.
    std::vector<oracle::cd> psi(s.amplitudes().begin(), s.amplitudes().end());
    const auto brute = oracle::eig2(oracle::brute_reduced(psi, 3, {1}));
    CHECK(std::abs(brute[0] - 1.0 / 3.0) < 1e-14);
    CHECK(std::abs(brute[1] - 2.0 / 3.0) < 1e-14);
    const auto spec = reduced_spectrum(s, mask(3, {1}));
    CHECK(std::abs(spec[0] - 1.0 / 3.0) < 1e-12);
    CHECK(std::abs(spec[1] - 2.0 / 3.0) < 1e-12);
  }
  SUBCASE("product state") {
    const auto s = state_of(3, {{"000", 1.0}});
    for (const auto& m : enumerate_proper_subsets(3)) {
      const auto spec = reduced_spectrum(s, m);
      CHECK(spec.back() == doctest::Approx(1.0).epsilon(1e-15));
      for (std::size_t k = 0; k + 1 < spec.size(); ++k) CHECK(spec[k] == 0.0);
    }
  }
}

TEST_CASE("density matrix invariants on random (state, mask) pairs") {
  std::mt19937_64 rng(11);
  const Tolerances tol;
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto s = random_state(n, seed);
    const std::uint64_t bits = 1 + rng() % ((std::uint64_t{1} << n) - 2);
    const SubsetMask kept(n, bits);
    const auto rho = partial_trace(s, kept);
    CHECK(rho.entries().hermiticity_defect() <= tol.herm);
    CHECK(std::abs(rho.entries().trace() - 1.0) <= tol.norm);
    const auto values = hermitian_eigenvalues(rho.entries());
    CHECK(values.front() >= -tol.eig);
    ++checked;
  }
}

TEST_CASE("tracing two particles at once equals tracing them one after another") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 5);
    const auto s = random_state(n, seed);
    const auto full = density_matrix(s);
    const int i = 1 + static_cast<int>(seed % n);
    const int j = 1 + static_cast<int>((seed / 3 + 1 + seed % n) % n);
    if (i == j) continue;
    std::vector<int> kept_both, kept_i;
    for (int p = 1; p <= n; ++p) {
      if (p != i && p != j) kept_both.push_back(p);
      if (p != i) kept_i.push_back(p);
    }
    const auto one_step = partial_trace(s, SubsetMask::from_particles(n, kept_both));
    const auto first = partial_trace(full, SubsetMask::from_particles(n, kept_i));
    const auto second = partial_trace(first, SubsetMask::from_particles(n, kept_both));
    REQUIRE(one_step.dim() == second.dim());
    for (std::size_t r = 0; r < one_step.dim(); ++r)
      for (std::size_t c = 0; c < one_step.dim(); ++c)
        CHECK(std::abs(one_step(r, c) - second(r, c)) <= 1e-12);
  }
}

TEST_CASE("complement reductions share their nonzero spectrum") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const auto s = random_state(n, 1000 + seed);
    for (const auto& m : enumerate_proper_subsets(n)) {
      if (m.size() > n - m.size()) continue;
      auto small = reduced_spectrum(s, m);
      auto large = reduced_spectrum(s, m.complement());
      // The larger side carries extra zeros at the bottom.
      for (std::size_t k = 0; k < small.size(); ++k) {
        CHECK(std::abs(small[small.size() - 1 - k] - large[large.size() - 1 - k]) <= 1e-10);
      }
      for (std::size_t k = 0; k + small.size() < large.size(); ++k) CHECK(large[k] <= 1e-10);
    }
  }
}

TEST_CASE("tensor_product inverts coefficient_matrix for product states") {
  const auto a = random_state(2, 1);
  const auto b = random_state(3, 2);
  const auto block = mask(5, {2, 4});
  const auto s = tensor_product(a, b, block);
  const auto m = coefficient_matrix(s, block);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(std::abs(m(r, c) - a[r] * b[c]) < 1e-15);
}
