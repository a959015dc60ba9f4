#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partent/tolerances.hpp"

namespace partent {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

// Basis ordering: particle 1 is the most significant bit of the basis index,
// so the bitstring "b1 b2 ... bN" reads left to right as particles 1..N.
std::string to_bitstring(std::uint64_t index, int n);
std::uint64_t parse_bitstring(std::string_view bits, int n);

struct BasisTerm {
  std::string bitstring;
  Complex amplitude;
};

// Normalized amplitude vector over the 2^N computational basis.
class PureState {
 public:
  // Normalizes `amplitudes`; throws EmptyState when every entry is below the
  // amplitude cutoff and DimensionMismatch when the size is not 2^n.
  static PureState from_amplitudes(int n, std::vector<Complex> amplitudes);

  int n_particles() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::uint64_t index) const { return amplitudes_[index]; }
  Complex amplitude(std::string_view bits) const;

  // Nonzero terms in ascending basis order.
  std::vector<BasisTerm> terms() const;
  std::vector<std::uint64_t> support() const;
  double norm() const;

 private:
  PureState(int n, std::vector<Complex> amplitudes)
      : n_(n), amplitudes_(std::move(amplitudes)) {}

  int n_;
  std::vector<Complex> amplitudes_;
};

// Sorted set of distinct basis indices that carry nonzero amplitudes.
class SupportPattern {
 public:
  SupportPattern(int n, std::vector<std::uint64_t> basis_indices);
  static SupportPattern from_bitstrings(std::span<const std::string> bitstrings);

  int n_particles() const { return n_; }
  std::size_t size() const { return indices_.size(); }
  std::span<const std::uint64_t> indices() const { return indices_; }
  std::vector<std::string> bitstrings() const;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

 private:
  int n_;
  std::vector<std::uint64_t> indices_;
};

// Terms sharing a bitstring are summed; terms at or below the amplitude
// cutoff are dropped before normalization.
PureState build_state(std::span<const BasisTerm> terms, int n);

PureState ghz_state(int n);
PureState w_family_state(int n = 3);
PureState random_state(int n, std::uint64_t seed);
PureState random_on_support(const SupportPattern& pattern, double min_magnitude,
                            std::uint64_t seed);

// Applies `u` to a single particle (1-based).
PureState apply_local(const PureState& state, int particle, const Matrix2& u);

// Haar-random 2x2 unitary, used for local-unitary invariance checks.
Matrix2 random_unitary(std::uint64_t seed);

}  // namespace partent
