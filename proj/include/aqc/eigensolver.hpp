#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "aqc/hamiltonian.hpp"

namespace aqc {

inline constexpr int kMaxEigenpairs = 8;
inline constexpr int kMaxDenseQubits = 12;

struct SolverOptions {
  /// Convergence when every residual <= tolerance * spectral_scale().
  double tolerance = 1e-12;
  /// Krylov basis size before a thick restart.
  int max_basis = 32;
  int max_matvecs = 200000;
  std::uint64_t seed = 0x5eed5eedULL;
  /// 0 picks max(2, k): a two-dimensional block resolves near-degenerate
  /// pairs that a single Krylov vector cannot split.
  int block_size = 0;
  /// Expand with diagonally preconditioned residuals (Davidson). Off gives
  /// plain block Lanczos expansion by raw residuals.
  bool diagonal_preconditioner = true;
};

struct EigenResult {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;
  std::vector<double> residual_norms;
  int matvecs = 0;
  int restarts = 0;

  double gap() const { return eigenvalues.at(1) - eigenvalues.at(0); }
};

/// k lowest eigenpairs by a thick-restarted block Krylov iteration with full
/// reorthogonalization. The start block is drawn from a seeded generator;
/// warm-start vectors, when given, are blended into it rather than replacing
/// it, so a state that was absent at the previous lambda can still be found.
/// Eigenvectors are sign-fixed (first significant component positive).
EigenResult lowest_eigenpairs(
    const InterpolatedHamiltonian& h, int k, const SolverOptions& options = {},
    std::span<const std::vector<double>> warm_start = {});

/// Dense matrix of H(lambda); N <= kMaxDenseQubits.
Eigen::MatrixXd dense_matrix(const InterpolatedHamiltonian& h);

/// Full ascending spectrum by dense symmetric diagonalization.
std::vector<double> dense_spectrum(const InterpolatedHamiltonian& h);

/// Flips v so that its first component above 1e-10 * max|v| is positive.
void fix_sign(std::span<double> v);

}  // namespace aqc
