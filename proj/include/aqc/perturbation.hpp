#pragma once

#include <optional>
#include <string_view>

#include "aqc/minima.hpp"
#include "aqc/sweep.hpp"

namespace aqc {

/// A classical cluster dressed to second order in the transverse field.
struct PerturbativeLevel {
  MinimaCluster cluster;
  /// sum_(n not in S) |<alpha|H_B|n>|^2 / (E_n - E_alpha) for the uniform
  /// superposition |alpha> over the cluster. Positive for the global
  /// cluster; any sign otherwise.
  double chi = 0.0;
  int superposition_norm = 1;  // cluster size
};

/// Builds the level from the defining sum. Every basis state one flip away
/// from some member enters with amplitude delta * c_n / sqrt(size), c_n the
/// number of members adjacent to it. Throws DegeneracyError if such a state
/// is degenerate with the cluster.
PerturbativeLevel chi(const IsingProblem& problem, const MinimaCluster& cluster);

/// lambda E_alpha - chi (1 - lambda)^2 / lambda; DomainError at lambda = 0.
double perturbed_energy(const PerturbativeLevel& level, double lambda);

struct EffectiveCoupling {
  double coupling_LG = 0.0;  // signed, intermediates measured from E_G
  double coupling_GL = 0.0;  // signed, intermediates measured from E_L
  int f = 0;                 // minimal Hamming distance between the clusters
  int pairs = 0;             // member pairs at distance f
};

/// Lowest-order tunneling element between the two cluster superpositions at
/// `lambda`: shortest flip sequences only, intermediates inside either
/// cluster excluded, unperturbed energies in the denominators. Evaluated by
/// dynamic programming over subsets of the differing bits of each pair.
EffectiveCoupling effective_coupling(const IsingProblem& problem,
                                     const MinimaCluster& global,
                                     const MinimaCluster& local, double lambda);

/// 2 sqrt(|H_LG| |H_GL|).
double predicted_min_gap(double coupling_LG, double coupling_GL);

enum class CrossingStatus {
  none,
  no_real_solution,
  below_lambda_c,
  degenerate_path,
};

std::string_view to_string(CrossingStatus status);

struct CrossingPrediction {
  double E_gap = 0.0;  // E_L - E_G
  double chi_G = 0.0;
  double chi_L = 0.0;
  std::optional<double> lambda_star;
  /// lambda used in the (1 - lambda)^f / lambda^(f-1) prefactor.
  double prefactor_lambda = std::numeric_limits<double>::quiet_NaN();
  int f = 0;
  double coupling_LG = std::numeric_limits<double>::quiet_NaN();
  double coupling_GL = std::numeric_limits<double>::quiet_NaN();
  double g_min_predicted = std::numeric_limits<double>::quiet_NaN();
  bool valid = false;
  CrossingStatus reason = CrossingStatus::none;
};

/// Crossing point of the two second-order levels and the gap it opens.
/// With chi_L <= chi_G there is no crossing; a crossing at or below
/// lambda_c is rejected. `prefactor_lambda` replaces the perturbative
/// lambda* in the coupling prefactor (e.g. with the exact anticrossing).
CrossingPrediction predict_crossing(
    const IsingProblem& problem, const PerturbativeLevel& global,
    const PerturbativeLevel& local, const ScaleEstimate& scale,
    std::optional<double> prefactor_lambda = std::nullopt);

}  // namespace aqc
