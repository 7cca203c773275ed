#include "aqc/minima.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

bool MinimaCluster::contains(std::uint32_t bits) const noexcept {
  auto it = std::lower_bound(
      members.begin(), members.end(), bits,
      [](const SpinConfiguration& m, std::uint32_t b) { return m.bits < b; });
  return it != members.end() && it->bits == bits;
}

namespace {

bool is_strict_minimum(const IsingProblem& problem, std::uint32_t bits,
                       double energy) {
  const double tol = kDegeneracyTolerance * std::max(1.0, std::abs(energy));
  for (int k = 0; k < problem.n_qubits(); ++k)
    if (!(problem.flip_delta_of(bits, k) > tol)) return false;
  return true;
}

double escape_cost_of(const IsingProblem& problem,
                      const std::vector<SpinConfiguration>& members) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : members)
    for (int k = 0; k < problem.n_qubits(); ++k)
      best = std::min(best, problem.flip_delta_of(m.bits, k));
  return best;
}

int distance_between(const std::vector<SpinConfiguration>& a,
                     const std::vector<SpinConfiguration>& b) {
  int best = std::numeric_limits<int>::max();
  for (const auto& x : a)
    for (const auto& y : b) best = std::min(best, std::popcount(x.bits ^ y.bits));
  return best;
}

}  // namespace

MinimaCluster make_cluster(const IsingProblem& problem,
                           std::vector<SpinConfiguration> members,
                           bool is_global) {
  if (members.empty()) throw InputError("cluster needs at least one member");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InputError("cluster members must be distinct");
  MinimaCluster c;
  c.energy = classical_energy(problem, members.front());
  for (const auto& m : members)
    if (!energies_degenerate(c.energy, classical_energy(problem, m)))
      throw InputError("cluster members are not degenerate");
  c.members = std::move(members);
  c.is_global = is_global;
  c.escape_cost = escape_cost_of(problem, c.members);
  return c;
}

std::vector<MinimaCluster> enumerate_minima(const IsingProblem& problem) {
  const int n = problem.n_qubits();
  if (n > kMaxQubits)
    throw CapacityError("brute-force scan limited to " +
                        std::to_string(kMaxQubits) + " qubits");

  struct Candidate {
    double energy;
    std::uint32_t bits;
  };
  std::vector<Candidate> found;
  const std::uint64_t dim = problem.dimension();
  for (std::uint64_t s = 0; s < dim; ++s) {
    const auto bits = static_cast<std::uint32_t>(s);
    // Cheap rejection before paying for the full energy.
    if (!(problem.flip_delta_of(bits, 0) > 0.0)) continue;
    const double e = problem.energy_of(bits);
    if (is_strict_minimum(problem, bits, e)) found.push_back({e, bits});
  }
  if (found.empty())
    throw DiagnosticError("no strict local minimum: landscape is degenerate "
                          "under every single flip");

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    return a.energy != b.energy ? a.energy < b.energy : a.bits < b.bits;
  });

  std::vector<MinimaCluster> clusters;
  for (const auto& c : found) {
    if (clusters.empty() || !energies_degenerate(clusters.back().energy, c.energy)) {
      MinimaCluster next;
      next.energy = c.energy;
      clusters.push_back(std::move(next));
    }
    clusters.back().members.emplace_back(c.bits, n);
  }
  for (auto& c : clusters) {
    std::sort(c.members.begin(), c.members.end());
    c.escape_cost = escape_cost_of(problem, c.members);
  }
  clusters.front().is_global = true;
  for (auto& c : clusters)
    c.distance_to_global = distance_between(c.members, clusters.front().members);
  return clusters;
}

}  // namespace aqc
