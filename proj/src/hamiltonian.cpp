#include "aqc/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

ClassicalLandscape::ClassicalLandscape(IsingProblem problem)
    : problem_(std::move(problem)) {
  const std::uint64_t dim = problem_.dimension();
  energies_.resize(dim);
  for (std::uint64_t s = 0; s < dim; ++s) {
    energies_[s] = problem_.energy_of(static_cast<std::uint32_t>(s));
    max_abs_ = std::max(max_abs_, std::abs(energies_[s]));
  }
}

InterpolatedHamiltonian::InterpolatedHamiltonian(
    std::shared_ptr<const ClassicalLandscape> landscape, double lambda)
    : landscape_(std::move(landscape)), lambda_(lambda) {
  if (!landscape_) throw InputError("null landscape");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InputError("lambda must lie in [0, 1]");
}

InterpolatedHamiltonian::InterpolatedHamiltonian(const IsingProblem& problem,
                                                 double lambda)
    : InterpolatedHamiltonian(std::make_shared<ClassicalLandscape>(problem),
                              lambda) {}

double InterpolatedHamiltonian::spectral_scale() const noexcept {
  return lambda_ * landscape_->max_abs_energy() + n_qubits() * hopping();
}

void InterpolatedHamiltonian::apply(std::span<const double> v,
                                    std::span<double> out) const {
  const std::size_t dim = dimension();
  if (v.size() != dim || out.size() != dim)
    throw InputError("vector length " + std::to_string(v.size()) +
                     " does not match dimension " + std::to_string(dim));
  const auto energies = landscape_->energies();
  for (std::size_t s = 0; s < dim; ++s) out[s] = lambda_ * energies[s] * v[s];
  const double t = hopping();
  if (t == 0.0) return;
  // Flipping bit i swaps the two halves of every block of width 2^(i+1).
  for (int i = 0; i < n_qubits(); ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t base = 0; base < dim; base += 2 * half) {
      double* lo = out.data() + base;
      double* hi = lo + half;
      const double* vlo = v.data() + base;
      const double* vhi = vlo + half;
      for (std::size_t s = 0; s < half; ++s) {
        lo[s] += t * vhi[s];
        hi[s] += t * vlo[s];
      }
    }
  }
}

std::vector<double> InterpolatedHamiltonian::apply(
    std::span<const double> v) const {
  std::vector<double> out(v.size());
  apply(v, out);
  return out;
}

}  // namespace aqc
