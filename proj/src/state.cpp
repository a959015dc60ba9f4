#include "partent/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "partent/errors.hpp"

namespace partent {

namespace {

void check_particle_count(int n, int min_n = 1) {
  if (n < min_n || n > kMaxParticles) {
    throw DimensionMismatch("particle count " + std::to_string(n) + " outside [" +
                            std::to_string(min_n) + ", " + std::to_string(kMaxParticles) +
                            "]");
  }
}

std::vector<Complex> gaussian_vector(std::size_t count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> out(count);
  for (auto& z : out) {
    const double re = normal(rng);
    const double im = normal(rng);
    z = {re, im};
  }
  return out;
}

}  // namespace

std::string to_bitstring(std::uint64_t index, int n) {
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((index >> (n - 1 - i)) & 1u) bits[static_cast<std::size_t>(i)] = '1';
  }
  return bits;
}

std::uint64_t parse_bitstring(std::string_view bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw DimensionMismatch("bitstring '" + std::string(bits) + "' has length " +
                            std::to_string(bits.size()) + ", expected " + std::to_string(n));
  }
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw DimensionMismatch("bitstring '" + std::string(bits) + "' contains '" +
                              std::string(1, c) + "'");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

PureState PureState::from_amplitudes(int n, std::vector<Complex> amplitudes) {
  check_particle_count(n);
  if (amplitudes.size() != (std::size_t{1} << n)) {
    throw DimensionMismatch("amplitude vector of size " + std::to_string(amplitudes.size()) +
                            " for " + std::to_string(n) + " particles");
  }
  double norm2 = 0.0;
  bool present = false;
  for (const auto& a : amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw EmptyState("non-finite amplitude");
    }
    norm2 += std::norm(a);
    present = present || std::abs(a) > kAmplitudeCutoff;
  }
  if (!present) throw EmptyState("all amplitudes are zero");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= scale;
  return PureState(n, std::move(amplitudes));
}

Complex PureState::amplitude(std::string_view bits) const {
  return amplitudes_[parse_bitstring(bits, n_)];
}

std::vector<BasisTerm> PureState::terms() const {
  std::vector<BasisTerm> out;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (amplitudes_[i] != Complex{}) out.push_back({to_bitstring(i, n_), amplitudes_[i]});
  }
  return out;
}

std::vector<std::uint64_t> PureState::support() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < amplitudes_.size(); ++i) {
    if (amplitudes_[i] != Complex{}) out.push_back(i);
  }
  return out;
}

double PureState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

SupportPattern::SupportPattern(int n, std::vector<std::uint64_t> basis_indices)
    : n_(n), indices_(std::move(basis_indices)) {
  check_particle_count(n);
  if (indices_.empty()) throw EmptyState("support pattern is empty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw DimensionMismatch("support pattern has repeated basis vectors");
  }
  if (indices_.back() >= (std::uint64_t{1} << n)) {
    throw DimensionMismatch("support index out of range");
  }
}

SupportPattern SupportPattern::from_bitstrings(std::span<const std::string> bitstrings) {
  if (bitstrings.empty()) throw EmptyState("support pattern is empty");
  const int n = static_cast<int>(bitstrings.front().size());
  std::vector<std::uint64_t> indices;
  indices.reserve(bitstrings.size());
  for (const auto& b : bitstrings) indices.push_back(parse_bitstring(b, n));
  return SupportPattern(n, std::move(indices));
}

std::vector<std::string> SupportPattern::bitstrings() const {
  std::vector<std::string> out;
  out.reserve(indices_.size());
  for (auto i : indices_) out.push_back(to_bitstring(i, n_));
  return out;
}

PureState build_state(std::span<const BasisTerm> terms, int n) {
  check_particle_count(n);
  std::vector<Complex> amplitudes(std::size_t{1} << n);
  for (const auto& t : terms) {
    if (!std::isfinite(t.amplitude.real()) || !std::isfinite(t.amplitude.imag())) {
      throw EmptyState("non-finite amplitude for " + t.bitstring);
    }
    amplitudes[parse_bitstring(t.bitstring, n)] += t.amplitude;
  }
  for (auto& a : amplitudes) {
    if (std::abs(a) <= kAmplitudeCutoff) a = {};
  }
  return PureState::from_amplitudes(n, std::move(amplitudes));
}

PureState ghz_state(int n) {
  check_particle_count(n, 2);
  std::vector<Complex> amplitudes(std::size_t{1} << n);
  amplitudes.front() = 1.0;
  amplitudes.back() = 1.0;
  return PureState::from_amplitudes(n, std::move(amplitudes));
}

PureState w_family_state(int n) {
  if (n != 3) throw Unsupported("W-family state is only provided for 3 particles");
  const std::array<BasisTerm, 3> terms{{{"000", 1.0}, {"110", 1.0}, {"101", 1.0}}};
  return build_state(terms, 3);
}

PureState random_state(int n, std::uint64_t seed) {
  check_particle_count(n);
  std::mt19937_64 rng(seed);
  return PureState::from_amplitudes(n, gaussian_vector(std::size_t{1} << n, rng));
}

PureState random_on_support(const SupportPattern& pattern, double min_magnitude,
                            std::uint64_t seed) {
  const double bound = 1.0 / std::sqrt(static_cast<double>(pattern.size()));
  if (!(min_magnitude > 0.0) || !(min_magnitude < bound)) {
    throw Infeasible("min_magnitude must lie in (0, 1/sqrt(" +
                     std::to_string(pattern.size()) + "))");
  }
  std::mt19937_64 rng(seed);
  const int n = pattern.n_particles();
  while (true) {
    auto draw = gaussian_vector(pattern.size(), rng);
    double norm2 = 0.0;
    for (const auto& z : draw) norm2 += std::norm(z);
    const double inv = 1.0 / std::sqrt(norm2);
    const bool ok = std::all_of(draw.begin(), draw.end(),
                                [&](const Complex& z) { return std::abs(z) * inv >= min_magnitude; });
    if (!ok) continue;
    std::vector<Complex> amplitudes(std::size_t{1} << n);
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      amplitudes[pattern.indices()[k]] = draw[k];
    }
    return PureState::from_amplitudes(n, std::move(amplitudes));
  }
}

PureState apply_local(const PureState& state, int particle, const Matrix2& u) {
  const int n = state.n_particles();
  if (particle < 1 || particle > n) {
    throw DimensionMismatch("particle " + std::to_string(particle) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << (n - particle);
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::uint64_t i = 0; i < out.size(); ++i) {
    if (i & bit) continue;
    const Complex a0 = state[i];
    const Complex a1 = state[i | bit];
    out[i] = u[0][0] * a0 + u[0][1] * a1;
    out[i | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
  return PureState::from_amplitudes(n, std::move(out));
}

Matrix2 random_unitary(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto v = gaussian_vector(2, rng);
  const double r = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  const Complex a = v[0] / r;
  const Complex b = v[1] / r;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const Complex phase = std::polar(1.0, angle(rng));
  return {{{phase * a, -phase * std::conj(b)}, {phase * b, phase * std::conj(a)}}};
}

}  // namespace partent
