#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aqc/eigensolver.hpp"
#include "aqc/ising.hpp"

namespace aqc {

struct OrderParameters {
  /// Spread (sum_n |psi_n|)^2 / 2^N: m / 2^N for a uniform superposition
  /// over m basis states.
  double S = 0.0;
  /// Normalized magnetization N^-1 sum_i <Z_i>.
  double M = 0.0;
};

/// Requires | ||v|| - 1 | <= 1e-8 and length 2^N for some N >= 1.
OrderParameters order_parameters(std::span<const double> ground);

struct SweepRow {
  double lambda = 0.0;
  std::vector<double> energies;  // E_0 .. E_{k-1}
  double gap = 0.0;              // E_1 - E_0
  double S = 0.0;
  double M = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::uint64_t problem_hash = 0;
  int k = 0;
  std::string grid;

  /// Interior rows whose gap is strictly below both neighbors.
  std::vector<std::size_t> gap_local_minima() const;
};

struct SweepOptions {
  int k = 3;
  bool warm_start = true;
  SolverOptions solver{};
};

/// n points spread uniformly over [lo, hi], endpoints included.
std::vector<double> uniform_grid(int points, double lo = 0.0, double hi = 1.0);

/// FNV-1a of the serialized instance; identifies the problem in reports.
std::uint64_t problem_hash(const IsingProblem& problem);

/// Lowest levels, gap and order parameters of the ground state on every
/// grid point. The grid must be strictly increasing inside [0, 1]. With
/// warm_start each point is seeded with the previous point's vectors, so
/// the sweep is sequential. Solver failures are rethrown naming lambda.
SweepResult sweep(const IsingProblem& problem, std::span<const double> grid,
                  const SweepOptions& options = {});

struct AnticrossingReport {
  double lambda_star_exact = std::numeric_limits<double>::quiet_NaN();
  double g_min = std::numeric_limits<double>::quiet_NaN();
  std::pair<double, double> bracket{0.0, 0.0};
  int evaluations = 0;
};

struct RefineOptions {
  /// Golden-section stops once the bracket is this narrow.
  double lambda_tolerance = 1e-10;
  SolverOptions solver{};
};

/// E_1(lambda) - E_0(lambda) at one point.
double gap_at(const IsingProblem& problem, double lambda,
              const SolverOptions& solver = {});

/// Golden-section minimization of the gap inside (lo, hi), finished by one
/// parabolic step on g^2, which is exactly quadratic near a two-level
/// anticrossing. Throws InputError when no interior point lies below both
/// bracket ends.
AnticrossingReport refine_minimum_gap(const IsingProblem& problem,
                                      std::pair<double, double> bracket,
                                      const RefineOptions& options = {});

enum class ScaleRule { user_supplied, max_local_scale };

struct ScaleEstimate {
  double calE = 0.0;
  ScaleRule rule = ScaleRule::max_local_scale;
  double lambda_c = 0.0;  // delta / (delta + calE)
};

/// max_i (|h_i| + sum_j |J_ij|).
double max_local_scale(const IsingProblem& problem);

/// Energy scale of H_P (from the rule, or `user_value` when supplied) and
/// the dominance ratio zeta = (1 - lambda) delta / (lambda calE); zeta is
/// +infinity at lambda = 0.
std::pair<ScaleEstimate, double> scale_and_zeta(
    const IsingProblem& problem, double lambda,
    std::optional<double> user_value = std::nullopt);

}  // namespace aqc
