#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "aqc/ising.hpp"

namespace testing {

/// Random fields and couplings on a graph with edge probability `density`.
/// Values are drawn from a continuous range, so exact ties are unlikely.
inline aqc::IsingProblem random_problem(std::mt19937_64& rng, int n, double density = 0.5,
                                        double delta = 1.0) {
  std::uniform_real_distribution<double> field(-2.0, 2.0), coin(0.0, 1.0);
  std::vector<double> h(n);
  for (auto& x : h) x = field(rng);
  std::vector<aqc::Coupling> js;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < density) js.push_back({i, j, field(rng)});
  return aqc::IsingProblem(n, std::move(h), std::move(js), delta);
}

/// Energy straight from the definition, independent of the library's
/// adjacency bookkeeping.
inline double direct_energy(const aqc::IsingProblem& p, std::uint32_t bits) {
  double e = 0.0;
  for (int i = 0; i < p.n_qubits(); ++i) e += p.h()[i] * aqc::spin_of(bits, i);
  for (const auto& c : p.couplings())
    e += c.value * aqc::spin_of(bits, c.i) * aqc::spin_of(bits, c.j);
  return e;
}

inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace testing
