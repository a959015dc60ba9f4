#include "partent/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "partent/errors.hpp"

namespace partent {

namespace {

// Packs the bits of `index` selected by `mask`, keeping their relative order.
std::uint64_t gather_bits(std::uint64_t index, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int pos = 63; pos >= 0; --pos) {
    const std::uint64_t bit = std::uint64_t{1} << pos;
    if (mask & bit) out = (out << 1) | static_cast<std::uint64_t>((index & bit) != 0);
  }
  return out;
}

// Inverse of gather_bits.
std::uint64_t scatter_bits(std::uint64_t packed, std::uint64_t mask) {
  std::uint64_t out = 0;
  int k = std::popcount(mask) - 1;
  for (int pos = 63; pos >= 0; --pos) {
    const std::uint64_t bit = std::uint64_t{1} << pos;
    if (mask & bit) {
      if ((packed >> k) & 1u) out |= bit;
      --k;
    }
  }
  return out;
}

// Position of each particle of `outer` inside the compact index over `outer`.
std::uint64_t relative_mask(const SubsetMask& inner, const SubsetMask& outer) {
  return gather_bits(inner.bits(), outer.bits());
}

void check_same_system(const PureState& state, const SubsetMask& mask) {
  if (mask.n_particles() != state.n_particles()) {
    throw DimensionMismatch("mask over " + std::to_string(mask.n_particles()) +
                            " particles applied to a " + std::to_string(state.n_particles()) +
                            "-particle state");
  }
}

}  // namespace

SubsetMask::SubsetMask(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > 63) throw DimensionMismatch("invalid particle count for mask");
  if (bits >> n) throw DimensionMismatch("mask has bits beyond particle " + std::to_string(n));
}

SubsetMask SubsetMask::from_particles(int n, std::span<const int> particles) {
  std::uint64_t bits = 0;
  for (int p : particles) {
    if (p < 1 || p > n) throw DimensionMismatch("particle " + std::to_string(p) + " out of range");
    bits |= std::uint64_t{1} << (n - p);
  }
  return SubsetMask(n, bits);
}

int SubsetMask::size() const { return std::popcount(bits_); }

bool SubsetMask::contains(int particle) const {
  return particle >= 1 && particle <= n_ && ((bits_ >> (n_ - particle)) & 1u);
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  return n_ == other.n_ && (bits_ & ~other.bits_) == 0;
}

SubsetMask SubsetMask::complement() const {
  return SubsetMask(n_, ~bits_ & ((std::uint64_t{1} << n_) - 1));
}

std::vector<int> SubsetMask::particles() const {
  std::vector<int> out;
  for (int p = 1; p <= n_; ++p)
    if (contains(p)) out.push_back(p);
  return out;
}

std::string SubsetMask::label() const {
  std::string out;
  for (int p : particles()) {
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

std::vector<SubsetMask> enumerate_subsets(int n, int traced) {
  if (n < 2 || traced < 1 || traced > n - 1) {
    throw DimensionMismatch("cannot trace " + std::to_string(traced) + " of " +
                            std::to_string(n) + " particles");
  }
  const int kept = n - traced;
  std::vector<SubsetMask> out;
  // Walk combinations of particle numbers in lexicographic order.
  std::vector<int> combo(static_cast<std::size_t>(kept));
  for (int i = 0; i < kept; ++i) combo[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(SubsetMask::from_particles(n, combo));
    int i = kept - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - kept + i + 1) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < kept; ++j)
      combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<SubsetMask> enumerate_proper_subsets(int n) {
  std::vector<SubsetMask> out;
  for (int traced = 1; traced <= n - 1; ++traced) {
    auto level = enumerate_subsets(n, traced);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

DensityMatrix::DensityMatrix(SubsetMask support, CMatrix entries)
    : support_(support), entries_(std::move(entries)) {
  const std::size_t expected = std::size_t{1} << support_.size();
  if (entries_.rows() != expected || entries_.cols() != expected) {
    throw DimensionMismatch("density matrix shape does not match its support");
  }
}

void DensityMatrix::check_invariants(const Tolerances& tol) const {
  if (entries_.hermiticity_defect() > tol.herm) {
    throw NumericalFailure("density matrix is not Hermitian");
  }
  const Complex tr = entries_.trace();
  if (std::abs(tr - 1.0) > tol.norm * static_cast<double>(dim())) {
    throw NumericalFailure("density matrix trace deviates from 1");
  }
}

CMatrix coefficient_matrix(const PureState& state, const SubsetMask& block) {
  check_same_system(state, block);
  const std::uint64_t row_mask = block.bits();
  const std::uint64_t col_mask = block.complement().bits();
  CMatrix m(std::size_t{1} << block.size(), std::size_t{1} << (state.n_particles() - block.size()));
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    m(gather_bits(i, row_mask), gather_bits(i, col_mask)) = state[i];
  }
  return m;
}

PureState tensor_product(const PureState& block_factor, const PureState& rest_factor,
                         const SubsetMask& block) {
  if (block_factor.n_particles() != block.size() ||
      rest_factor.n_particles() != block.n_particles() - block.size()) {
    throw DimensionMismatch("factor sizes do not match the block");
  }
  const std::uint64_t row_mask = block.bits();
  const std::uint64_t col_mask = block.complement().bits();
  std::vector<Complex> amplitudes(std::size_t{1} << block.n_particles());
  for (std::uint64_t r = 0; r < block_factor.dim(); ++r) {
    if (block_factor[r] == Complex{}) continue;
    for (std::uint64_t c = 0; c < rest_factor.dim(); ++c) {
      amplitudes[scatter_bits(r, row_mask) | scatter_bits(c, col_mask)] =
          block_factor[r] * rest_factor[c];
    }
  }
  return PureState::from_amplitudes(block.n_particles(), std::move(amplitudes));
}

DensityMatrix density_matrix(const PureState& state) {
  CMatrix psi(state.dim(), 1);
  for (std::uint64_t i = 0; i < state.dim(); ++i) psi(i, 0) = state[i];
  return DensityMatrix(SubsetMask::all(state.n_particles()), psi.gram());
}

DensityMatrix partial_trace(const PureState& state, const SubsetMask& kept) {
  check_same_system(state, kept);
  if (!kept.is_proper()) {
    throw DimensionMismatch("kept set must be a proper nonempty subset, got {" + kept.label() +
                            "}");
  }
  // rho_A[x, y] = sum_z psi[x z] conj(psi[y z]) = (M M^H)[x, y].
  return DensityMatrix(kept, coefficient_matrix(state, kept).gram());
}

DensityMatrix partial_trace(const DensityMatrix& rho, const SubsetMask& kept) {
  if (kept.empty() || !kept.is_subset_of(rho.support())) {
    throw DimensionMismatch("kept set {" + kept.label() + "} is not a nonempty subset of {" +
                            rho.support().label() + "}");
  }
  const std::uint64_t keep_local = relative_mask(kept, rho.support());
  const std::uint64_t full_local = (std::uint64_t{1} << rho.support().size()) - 1;
  const std::uint64_t trace_local = full_local & ~keep_local;

  CMatrix out(std::size_t{1} << kept.size(), std::size_t{1} << kept.size());
  const std::size_t traced_dim = std::size_t{1} << std::popcount(trace_local);
  const std::size_t kept_dim = out.rows();
  for (std::uint64_t x = 0; x < kept_dim; ++x) {
    const std::uint64_t xs = scatter_bits(x, keep_local);
    for (std::uint64_t y = 0; y < kept_dim; ++y) {
      const std::uint64_t ys = scatter_bits(y, keep_local);
      Complex s{};
      for (std::uint64_t z = 0; z < traced_dim; ++z) {
        const std::uint64_t zs = scatter_bits(z, trace_local);
        s += rho(xs | zs, ys | zs);
      }
      out(x, y) = s;
    }
  }
  return DensityMatrix(kept, std::move(out));
}

std::vector<double> density_spectrum(const DensityMatrix& rho, const Tolerances& tol) {
  rho.check_invariants(tol);
  auto values = hermitian_eigenvalues(rho.entries());
  for (auto& v : values) {
    if (v < -tol.eig) {
      throw NumericalFailure("density matrix has eigenvalue " + std::to_string(v));
    }
    v = std::clamp(v, 0.0, 1.0);
  }
  return values;
}

std::vector<double> reduced_spectrum(const PureState& state, const SubsetMask& kept,
                                     const Tolerances& tol) {
  return density_spectrum(partial_trace(state, kept), tol);
}

}  // namespace partent
