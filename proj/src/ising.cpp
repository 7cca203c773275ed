#include "aqc/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "aqc/errors.hpp"

namespace aqc {

bool energies_degenerate(double a, double b) noexcept {
  return std::abs(a - b) <= kDegeneracyTolerance * std::max(1.0, std::abs(a));
}

SpinConfiguration::SpinConfiguration(std::uint32_t bits_, int n_qubits_)
    : bits(bits_), n_qubits(n_qubits_) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw InputError("qubit count " + std::to_string(n_qubits) +
                     " outside 1.." + std::to_string(kMaxQubits));
  if ((std::uint64_t{bits} >> n_qubits) != 0)
    throw InputError("configuration bits exceed register width");
}

SpinConfiguration SpinConfiguration::flipped(int k) const {
  if (k < 0 || k >= n_qubits)
    throw InputError("qubit index " + std::to_string(k) + " out of range");
  return {bits ^ (1u << k), n_qubits};
}

IsingProblem::IsingProblem(int n_qubits, std::vector<double> h,
                           std::vector<Coupling> couplings, double delta)
    : n_(n_qubits),
      h_(std::move(h)),
      couplings_(std::move(couplings)),
      delta_(delta) {
  if (n_ < 1 || n_ > kMaxQubits)
    throw InputError("qubit count " + std::to_string(n_) + " outside 1.." +
                     std::to_string(kMaxQubits));
  if (static_cast<int>(h_.size()) != n_)
    throw InputError("expected " + std::to_string(n_) + " local fields, got " +
                     std::to_string(h_.size()));
  if (!(delta_ > 0.0) || !std::isfinite(delta_))
    throw InputError("transverse amplitude must be positive");
  for (double v : h_)
    if (!std::isfinite(v)) throw InputError("non-finite local field");

  std::set<std::pair<int, int>> seen;
  adjacency_.resize(n_);
  for (auto& c : couplings_) {
    if (c.i == c.j)
      throw InputError("self-coupling on qubit " + std::to_string(c.i));
    if (c.i > c.j) std::swap(c.i, c.j);
    if (c.i < 0 || c.j >= n_)
      throw InputError("coupling (" + std::to_string(c.i) + "," +
                       std::to_string(c.j) + ") out of range");
    if (!std::isfinite(c.value)) throw InputError("non-finite coupling");
    if (!seen.emplace(c.i, c.j).second)
      throw InputError("duplicate coupling (" + std::to_string(c.i) + "," +
                       std::to_string(c.j) + ")");
    adjacency_[c.i].push_back({c.j, c.value});
    adjacency_[c.j].push_back({c.i, c.value});
  }
}

std::span<const IsingProblem::Neighbor> IsingProblem::neighbors(int k) const {
  if (k < 0 || k >= n_)
    throw InputError("qubit index " + std::to_string(k) + " out of range");
  return adjacency_[k];
}

IsingProblem IsingProblem::with_delta(double delta) const {
  return IsingProblem(n_, h_, couplings_, delta);
}

double IsingProblem::energy_of(std::uint32_t bits) const noexcept {
  double e = 0.0;
  for (int i = 0; i < n_; ++i) e += h_[i] * spin_of(bits, i);
  for (const auto& c : couplings_)
    e += c.value * spin_of(bits, c.i) * spin_of(bits, c.j);
  return e;
}

double IsingProblem::local_field(std::uint32_t bits, int k) const noexcept {
  double field = h_[k];
  for (const auto& nb : adjacency_[k]) field += nb.coupling * spin_of(bits, nb.index);
  return field;
}

namespace {

void check_register(const IsingProblem& problem, const SpinConfiguration& c) {
  if (c.n_qubits != problem.n_qubits())
    throw InputError("configuration has " + std::to_string(c.n_qubits) +
                     " qubits, problem has " +
                     std::to_string(problem.n_qubits()));
}

}  // namespace

double classical_energy(const IsingProblem& problem,
                        const SpinConfiguration& config) {
  check_register(problem, config);
  return problem.energy_of(config.bits);
}

double single_flip_delta(const IsingProblem& problem,
                         const SpinConfiguration& config, int k) {
  check_register(problem, config);
  if (k < 0 || k >= problem.n_qubits())
    throw InputError("qubit index " + std::to_string(k) + " out of range");
  return problem.flip_delta_of(config.bits, k);
}

int hamming_distance(const SpinConfiguration& a, const SpinConfiguration& b) {
  if (a.n_qubits != b.n_qubits)
    throw InputError("hamming distance between registers of different width");
  return std::popcount(a.bits ^ b.bits);
}

}  // namespace aqc
