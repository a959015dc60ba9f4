#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "partent/linalg.hpp"
#include "partent/state.hpp"
#include "partent/tolerances.hpp"

namespace partent {

// Set of particles of an N-particle system. Internally stored in basis-index
// orientation: particle p occupies bit (N - p), matching PureState indexing.
class SubsetMask {
 public:
  SubsetMask(int n, std::uint64_t bits);
  static SubsetMask from_particles(int n, std::span<const int> particles);
  static SubsetMask all(int n) { return SubsetMask(n, (std::uint64_t{1} << n) - 1); }

  int n_particles() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool is_proper() const { return size() >= 1 && size() <= n_ - 1; }
  bool contains(int particle) const;
  bool is_subset_of(const SubsetMask& other) const;
  SubsetMask complement() const;
  // Ascending 1-based particle numbers.
  std::vector<int> particles() const;
  // Comma-separated particle list, e.g. "1,3".
  std::string label() const;

  friend bool operator==(const SubsetMask&, const SubsetMask&) = default;

 private:
  int n_;
  std::uint64_t bits_;
};

// All subsets keeping n - traced particles, lexicographic in particle order.
std::vector<SubsetMask> enumerate_subsets(int n, int traced);

// Every proper nonempty subset: kept size N-1 down to 1, lexicographic within
// each size.
std::vector<SubsetMask> enumerate_proper_subsets(int n);

// Reduced state on the particles in `support()`. Row/column index bits follow
// the support's particles in ascending order, most significant first.
class DensityMatrix {
 public:
  DensityMatrix(SubsetMask support, CMatrix entries);

  const SubsetMask& support() const { return support_; }
  std::size_t dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }

  // Throws NumericalFailure when Hermiticity or unit trace is violated.
  void check_invariants(const Tolerances& tol = {}) const;

 private:
  SubsetMask support_;
  CMatrix entries_;
};

// The state's amplitudes reshaped to a 2^|block| x 2^(N-|block|) matrix; rows
// index the block's particles, columns the complement's.
CMatrix coefficient_matrix(const PureState& state, const SubsetMask& block);

// Inverse of coefficient_matrix for a product of two factor states.
PureState tensor_product(const PureState& block_factor, const PureState& rest_factor,
                         const SubsetMask& block);

DensityMatrix density_matrix(const PureState& state);
DensityMatrix partial_trace(const PureState& state, const SubsetMask& kept);
// Traces the particles of `rho.support()` that are not in `kept`.
DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetMask& kept);

// Ascending eigenvalues of the reduction onto `kept`, clamped to [0, 1].
// Eigenvalues below -tol.eig raise NumericalFailure.
std::vector<double> reduced_spectrum(const PureState& state, const SubsetMask& kept,
                                     const Tolerances& tol = {});

// Eigenvalues of a density matrix with the same clamping rule.
std::vector<double> density_spectrum(const DensityMatrix& rho, const Tolerances& tol = {});

}  // namespace partent
