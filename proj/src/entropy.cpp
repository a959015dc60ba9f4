#include "partent/entropy.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "parallel.hpp"
#include "partent/errors.hpp"

namespace partent {

double entropy_from_spectrum(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double l : eigenvalues) {
    if (l > 0.0) s -= l * std::log2(l);
  }
  const double cap = eigenvalues.empty() ? 0.0 : std::log2(static_cast<double>(eigenvalues.size()));
  return std::clamp(s, 0.0, cap);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  const auto spectrum = density_spectrum(rho, tol);
  return entropy_from_spectrum(spectrum);
}

double partial_entropy(const PureState& state, const SubsetMask& kept, const Tolerances& tol) {
  const SubsetMask other = kept.complement();
  const SubsetMask& side = other.size() < kept.size() ? other : kept;
  return von_neumann_entropy(partial_trace(state, side), tol);
}

EntropyReport::EntropyReport(int n, std::vector<Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].kept.n_particles() != n_) {
      throw DimensionMismatch("report entry belongs to a different system size");
    }
    index_.emplace(entries_[i].kept.bits(), i);
  }
}

std::optional<double> EntropyReport::find(const SubsetMask& kept) const {
  const auto it = index_.find(kept.bits());
  if (it == index_.end() || kept.n_particles() != n_) return std::nullopt;
  return entries_[it->second].entropy;
}

double EntropyReport::at(const SubsetMask& kept) const {
  if (auto s = find(kept)) return *s;
  throw DimensionMismatch("no entropy recorded for {" + kept.label() + "}");
}

std::vector<double> EntropyReport::single_particle() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int p = 1; p <= n_; ++p) {
    const int particle[] = {p};
    out.push_back(at(SubsetMask::from_particles(n_, particle)));
  }
  return out;
}

EntropyReport full_report(const PureState& state, SubsetScope scope, const Tolerances& tol) {
  const int n = state.n_particles();
  if (n < 2) throw DimensionMismatch("entropy report needs at least 2 particles");
  const auto subsets = enumerate_proper_subsets(n);
  std::vector<double> values(subsets.size());

  // Which subsets get diagonalized. Under symmetry completion, one side of
  // every bipartition: the smaller, or the one holding particle 1 on a tie.
  auto computed_directly = [&](const SubsetMask& s) {
    if (scope == SubsetScope::AllProper) return true;
    const int k = s.size();
    return 2 * k < n || (2 * k == n && s.contains(1));
  };

  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    if (computed_directly(subsets[i])) work.push_back(i);

  detail::parallel_for(work.size(), [&](std::size_t w) {
    const auto i = work[w];
    values[i] = von_neumann_entropy(partial_trace(state, subsets[i]), tol);
  });

  std::vector<EntropyReport::Entry> entries;
  entries.reserve(subsets.size());
  std::unordered_map<std::uint64_t, double> direct;
  for (auto i : work) direct.emplace(subsets[i].bits(), values[i]);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto it = direct.find(subsets[i].bits());
    const double s =
        it != direct.end() ? it->second : direct.at(subsets[i].complement().bits());
    entries.push_back({subsets[i], s});
  }
  return EntropyReport(n, std::move(entries));
}

double eta_from_report(const EntropyReport& report, const Tolerances& tol) {
  for (const auto& e : report.entries()) {
    if (e.entropy <= tol.zero) return 0.0;
  }
  const auto singles = report.single_particle();
  const double mean =
      std::accumulate(singles.begin(), singles.end(), 0.0) / static_cast<double>(singles.size());
  return std::clamp(mean, 0.0, 1.0);
}

double eta_measure(const PureState& state, const Tolerances& tol) {
  return eta_from_report(full_report(state, SubsetScope::SymmetryCompleted, tol), tol);
}

double mean_single_particle_entropy(const PureState& state, const Tolerances& tol) {
  const int n = state.n_particles();
  if (n < 2) throw DimensionMismatch("entropy needs at least 2 particles");
  double total = 0.0;
  for (int p = 1; p <= n; ++p) {
    const int particle[] = {p};
    total += von_neumann_entropy(partial_trace(state, SubsetMask::from_particles(n, particle)), tol);
  }
  return total / n;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::FullySeparable:
      return "FullySeparable";
    case Verdict::PartiallyEntangled:
      return "PartiallyEntangled";
    case Verdict::GenuinelyEntangled:
      return "GenuinelyEntangled";
  }
  return "Unknown";
}

bool factorization_oracle(const PureState& state, const SubsetMask& block, const Tolerances& tol) {
  if (block.n_particles() != state.n_particles() || !block.is_proper()) {
    throw DimensionMismatch("factorization cut {" + block.label() + "} is not proper");
  }
  const CMatrix m = coefficient_matrix(state, block);
  Eigen::MatrixXcd dense(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
  const auto& sigma = svd.singularValues();
  return sigma(1) <= tol.zero * sigma(0);
}

std::pair<PureState, PureState> extract_factors(const PureState& state, const SubsetMask& block) {
  if (block.n_particles() != state.n_particles() || !block.is_proper()) {
    throw DimensionMismatch("factorization cut {" + block.label() + "} is not proper");
  }
  const CMatrix m = coefficient_matrix(state, block);

  // For a rank-1 matrix M = a b^T, the column and row through the largest
  // entry are proportional to a and b.
  std::size_t pr = 0, pc = 0;
  double largest = -1.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > largest) {
        largest = std::abs(m(r, c));
        pr = r;
        pc = c;
      }

  std::vector<Complex> left(m.rows()), right(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) left[r] = m(r, pc);
  for (std::size_t c = 0; c < m.cols(); ++c) right[c] = m(pr, c);

  auto block_factor = PureState::from_amplitudes(block.size(), std::move(left));
  const auto rest_factor = PureState::from_amplitudes(state.n_particles() - block.size(), std::move(right));

  // Align the global phase with the input.
  const auto trial = tensor_product(block_factor, rest_factor, block);
  Complex overlap{};
  for (std::uint64_t i = 0; i < state.dim(); ++i) overlap += std::conj(trial[i]) * state[i];
  if (std::abs(overlap) > 0.0) {
    std::vector<Complex> phased(block_factor.amplitudes().begin(), block_factor.amplitudes().end());
    const Complex phase = overlap / std::abs(overlap);
    for (auto& a : phased) a *= phase;
    block_factor = PureState::from_amplitudes(block.size(), std::move(phased));
  }

  const auto rebuilt = tensor_product(block_factor, rest_factor, block);
  double residual = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) residual += std::norm(rebuilt[i] - state[i]);
  residual = std::sqrt(residual);
  if (residual > kReconstructionTolerance) {
    throw FactorExtractionFailure("state does not factor across {" + block.label() +
                                  "}: reconstruction residual " + std::to_string(residual));
  }
  return {std::move(block_factor), rest_factor};
}

namespace {

struct Piece {
  PureState state;
  std::vector<int> particles;  // global labels, ascending
};

// Splits `piece` recursively; `top` supplies precomputed entropies for the
// outermost call.
void split(const Piece& piece, const EntropyReport* top, const Tolerances& tol,
           Partition& out) {
  const int m = piece.state.n_particles();
  if (m == 1) {
    out.push_back(piece.particles);
    return;
  }
  for (int k = 1; 2 * k <= m; ++k) {
    for (const auto& cut : enumerate_subsets(m, m - k)) {
      const double s = top ? top->at(cut) : partial_entropy(piece.state, cut, tol);
      if (s > tol.zero) continue;

      auto [inner, outer] = extract_factors(piece.state, cut);
      std::vector<int> inner_labels, outer_labels;
      for (int p = 1; p <= m; ++p) {
        (cut.contains(p) ? inner_labels : outer_labels)
            .push_back(piece.particles[static_cast<std::size_t>(p - 1)]);
      }
      split({std::move(inner), std::move(inner_labels)}, nullptr, tol, out);
      split({std::move(outer), std::move(outer_labels)}, nullptr, tol, out);
      return;
    }
  }
  out.push_back(piece.particles);
}

}  // namespace

Classification classify(const PureState& state, const Tolerances& tol) {
  const int n = state.n_particles();
  auto report = full_report(state, SubsetScope::SymmetryCompleted, tol);

  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  Partition partition;
  split({state, labels}, &report, tol, partition);
  std::sort(partition.begin(), partition.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Verdict verdict = Verdict::PartiallyEntangled;
  if (partition.size() == 1) {
    verdict = Verdict::GenuinelyEntangled;
  } else if (partition.size() == static_cast<std::size_t>(n)) {
    verdict = Verdict::FullySeparable;
  }
  const double eta = eta_from_report(report, tol);
  return {verdict, eta, std::move(partition), std::move(report)};
}

}  // namespace partent
