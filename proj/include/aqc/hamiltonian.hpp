#pragma once

#include <memory>
#include <span>
#include <vector>

#include "aqc/ising.hpp"

namespace aqc {

/// Classical energies of every basis state, computed once per problem and
/// shared between the Hamiltonians built at different lambda.
class ClassicalLandscape {
 public:
  explicit ClassicalLandscape(IsingProblem problem);

  const IsingProblem& problem() const noexcept { return problem_; }
  std::span<const double> energies() const noexcept { return energies_; }
  double max_abs_energy() const noexcept { return max_abs_; }

 private:
  IsingProblem problem_;
  std::vector<double> energies_;
  double max_abs_ = 0.0;
};

/// H(lambda) = (1 - lambda) * delta * sum_i X_i + lambda * H_P, applied
/// matrix-free in the computational basis.
class InterpolatedHamiltonian {
 public:
  InterpolatedHamiltonian(std::shared_ptr<const ClassicalLandscape> landscape,
                          double lambda);
  InterpolatedHamiltonian(const IsingProblem& problem, double lambda);

  const IsingProblem& problem() const noexcept { return landscape_->problem(); }
  const std::shared_ptr<const ClassicalLandscape>& landscape() const noexcept {
    return landscape_;
  }
  double lambda() const noexcept { return lambda_; }
  int n_qubits() const noexcept { return problem().n_qubits(); }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(problem().dimension());
  }

  double diagonal(std::size_t n) const noexcept {
    return lambda_ * landscape_->energies()[n];
  }
  /// Off-diagonal element between basis states one flip apart.
  double hopping() const noexcept {
    return (1.0 - lambda_) * problem().delta();
  }
  /// Row-sum bound max|diag| + N (1 - lambda) delta on the operator norm.
  double spectral_scale() const noexcept;

  void apply(std::span<const double> v, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> v) const;

 private:
  std::shared_ptr<const ClassicalLandscape> landscape_;
  double lambda_;
};

}  // namespace aqc
