#pragma once

#include <vector>

#include "aqc/ising.hpp"

namespace aqc {

/// Degenerate classical minima sharing one energy. Members are sorted by
/// basis index. Clustering is by energy only; whether a symmetry maps the
/// members onto each other is not checked.
struct MinimaCluster {
  std::vector<SpinConfiguration> members;
  double energy = 0.0;
  bool is_global = false;
  /// Smallest Hamming distance from any member to any global-cluster member.
  int distance_to_global = 0;
  /// Cheapest single flip out of any member.
  double escape_cost = 0.0;

  int size() const noexcept { return static_cast<int>(members.size()); }
  bool contains(std::uint32_t bits) const noexcept;
};

/// Exhaustive scan for strict local minima (every single flip raises the
/// energy by more than the degeneracy tolerance), grouped by energy and
/// sorted ascending. The first cluster is the global one.
std::vector<MinimaCluster> enumerate_minima(const IsingProblem& problem);

/// Builds a cluster from explicit members (used for hand-picked pairs).
MinimaCluster make_cluster(const IsingProblem& problem,
                           std::vector<SpinConfiguration> members,
                           bool is_global);

}  // namespace aqc
