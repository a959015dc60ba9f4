#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "partent/reduction.hpp"
#include "partent/state.hpp"
#include "partent/tolerances.hpp"

namespace partent {

// -sum l log2 l with 0 log 0 = 0, clamped to [0, log2(size)].
double entropy_from_spectrum(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = {});

// Entropy of the reduction onto `kept`, in bits. Diagonalizes whichever of
// the kept/traced sides is smaller; both give the same nonzero spectrum.
double partial_entropy(const PureState& state, const SubsetMask& kept,
                       const Tolerances& tol = {});

enum class SubsetScope {
  // Diagonalize every proper subset independently.
  AllProper,
  // Diagonalize one side of each bipartition and copy the value to its
  // complement. Valid for pure states.
  SymmetryCompleted,
};

class EntropyReport {
 public:
  struct Entry {
    SubsetMask kept;
    double entropy;
  };

  EntropyReport(int n, std::vector<Entry> entries);

  int n_particles() const { return n_; }
  const std::vector<Entry>& entries() const { return entries_; }
  double at(const SubsetMask& kept) const;
  std::optional<double> find(const SubsetMask& kept) const;
  // S_(i) for i = 1..N.
  std::vector<double> single_particle() const;

 private:
  int n_;
  std::vector<Entry> entries_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Entropies of all proper nonempty subsets, ordered by kept size N-1 down to
// 1 and lexicographically within a size.
EntropyReport full_report(const PureState& state,
                          SubsetScope scope = SubsetScope::SymmetryCompleted,
                          const Tolerances& tol = {});

// Mean single-particle entropy when every proper-subset entropy exceeds
// tol.zero, and 0 otherwise.
double eta_from_report(const EntropyReport& report, const Tolerances& tol = {});
double eta_measure(const PureState& state, const Tolerances& tol = {});

// Mean single-particle entropy with no zero branch.
double mean_single_particle_entropy(const PureState& state, const Tolerances& tol = {});

enum class Verdict { FullySeparable, PartiallyEntangled, GenuinelyEntangled };

std::string to_string(Verdict v);

using Partition = std::vector<std::vector<int>>;

struct Classification {
  Verdict verdict;
  double eta;
  Partition partition;  // blocks sorted by their smallest particle
  EntropyReport report;
};

// Finest separable partition by recursive splitting along zero-entropy cuts,
// smallest block first, lexicographic among equal sizes.
Classification classify(const PureState& state, const Tolerances& tol = {});

// Rank-1 test of the coefficient matrix across (block, complement): true when
// sigma_2 <= tol.zero * sigma_1. Computed by SVD, independently of the
// entropy path.
bool factorization_oracle(const PureState& state, const SubsetMask& block,
                          const Tolerances& tol = {});

inline constexpr double kReconstructionTolerance = 1e-8;

// Splits a product state into normalized factors on `block` and on its
// complement, phased so that tensor_product(first, second, block)
// reproduces the input. Throws FactorExtractionFailure when the state does
// not factor across the cut.
std::pair<PureState, PureState> extract_factors(const PureState& state, const SubsetMask& block);

}  // namespace partent
