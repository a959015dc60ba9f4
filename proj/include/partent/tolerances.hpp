#pragma once

namespace partent {

inline constexpr int kMaxParticles = 16;

// Reductions larger than this are slow for the dense eigensolver.
inline constexpr int kLargeReductionParticles = 12;

// Amplitudes at or below this magnitude do not count as present terms.
inline constexpr double kAmplitudeCutoff = 1e-12;

struct Tolerances {
  double norm = 1e-12;   // |Tr(rho) - 1|, |<psi|psi> - 1|
  double herm = 1e-10;   // max |M - M^H|
  double eig = 1e-9;     // eigenvalues in (-eig, 0) are clamped to zero
  double zero = 1e-9;    // entropy (bits) and scaled singular-value cut
};

}  // namespace partent
