#include "aqc/perturbation.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

PerturbativeLevel chi(const IsingProblem& problem, const MinimaCluster& cluster) {
  if (cluster.members.empty()) throw InputError("empty cluster");
  for (const auto& m : cluster.members)
    if (m.n_qubits != problem.n_qubits())
      throw InputError("cluster register does not match problem");

  // c_n: how many members sit one flip away from n. Ordered map keeps the
  // summation order deterministic.
  std::map<std::uint32_t, int> parents;
  for (const auto& m : cluster.members)
    for (int k = 0; k < problem.n_qubits(); ++k) {
      const std::uint32_t n = m.bits ^ (1u << k);
      if (!cluster.contains(n)) ++parents[n];
    }

  const double delta2 = problem.delta() * problem.delta();
  const double size = static_cast<double>(cluster.members.size());
  double sum = 0.0;
  for (const auto& [n, c] : parents) {
    const double en = problem.energy_of(n);
    if (energies_degenerate(cluster.energy, en))
      throw DegeneracyError("state " + std::to_string(n) +
                            " one flip from the cluster is degenerate with it");
    sum += delta2 * c * c / size / (en - cluster.energy);
  }
  return {cluster, sum, static_cast<int>(cluster.members.size())};
}

double perturbed_energy(const PerturbativeLevel& level, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw DomainError("perturbed energy needs lambda in (0, 1]");
  const double u = 1.0 - lambda;
  return lambda * level.cluster.energy - level.chi * u * u / lambda;
}

namespace {

// Sum over orderings of the bits in `diff` of prod 1 / (e_ref - E(state))
// over the f - 1 intermediates, skipping paths through excluded states.
double path_sum(const IsingProblem& problem, std::uint32_t start,
                std::uint32_t diff, double e_ref, const MinimaCluster& a,
                const MinimaCluster& b) {
  std::vector<int> bits;
  for (std::uint32_t d = diff; d; d &= d - 1) bits.push_back(std::countr_zero(d));
  const int f = static_cast<int>(bits.size());
  const std::uint32_t full = (1u << f) - 1u;
  std::vector<double> amp(std::size_t{1} << f, 0.0);
  amp[0] = 1.0;
  for (std::uint32_t subset = 1; subset <= full; ++subset) {
    double acc = 0.0;
    for (std::uint32_t rest = subset; rest; rest &= rest - 1)
      acc += amp[subset & ~(rest & -rest)];
    if (subset == full) {
      amp[subset] = acc;
      break;
    }
    std::uint32_t state = start;
    for (int i = 0; i < f; ++i)
      if ((subset >> i) & 1u) state ^= 1u << bits[i];
    if (a.contains(state) || b.contains(state)) continue;
    const double e = problem.energy_of(state);
    if (energies_degenerate(e_ref, e))
      throw DegeneracyError("intermediate state " + std::to_string(state) +
                            " is degenerate with a path endpoint");
    amp[subset] = acc / (e_ref - e);
  }
  return amp[full];
}

}  // namespace

EffectiveCoupling effective_coupling(const IsingProblem& problem,
                                     const MinimaCluster& global,
                                     const MinimaCluster& local, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw InputError("effective coupling needs lambda in (0, 1)");
  if (global.members.empty() || local.members.empty())
    throw InputError("empty cluster");

  EffectiveCoupling out;
  out.f = std::numeric_limits<int>::max();
  for (const auto& l : local.members)
    for (const auto& g : global.members)
      out.f = std::min(out.f, std::popcount(l.bits ^ g.bits));
  if (out.f == 0) throw InputError("clusters overlap (Hamming distance 0)");
  if (out.f > kMaxQubits) throw InputError("clusters on different registers");

  double sum_lg = 0.0, sum_gl = 0.0;
  for (const auto& l : local.members)
    for (const auto& g : global.members) {
      const std::uint32_t diff = l.bits ^ g.bits;
      if (std::popcount(diff) != out.f) continue;
      ++out.pairs;
      sum_lg += path_sum(problem, l.bits, diff, global.energy, global, local);
      sum_gl += path_sum(problem, g.bits, diff, local.energy, global, local);
    }

  const double f = out.f;
  const double prefactor = std::pow((1.0 - lambda) * problem.delta(), f) /
                           std::pow(lambda, f - 1.0) /
                           std::sqrt(static_cast<double>(local.members.size()) *
                                     static_cast<double>(global.members.size()));
  out.coupling_LG = prefactor * sum_lg;
  out.coupling_GL = prefactor * sum_gl;
  return out;
}

double predicted_min_gap(double coupling_LG, double coupling_GL) {
  return 2.0 * std::sqrt(std::abs(coupling_LG) * std::abs(coupling_GL));
}

std::string_view to_string(CrossingStatus status) {
  switch (status) {
    case CrossingStatus::none: return "none";
    case CrossingStatus::no_real_solution: return "no_real_solution";
    case CrossingStatus::below_lambda_c: return "below_lambda_c";
    case CrossingStatus::degenerate_path: return "degenerate_path";
  }
  return "unknown";
}

CrossingPrediction predict_crossing(const IsingProblem& problem,
                                    const PerturbativeLevel& global,
                                    const PerturbativeLevel& local,
                                    const ScaleEstimate& scale,
                                    std::optional<double> prefactor_lambda) {
  const double eg = global.cluster.energy, el = local.cluster.energy;
  if (energies_degenerate(eg, el))
    throw InputError("local and global clusters share one energy");
  if (el < eg) throw InputError("local cluster lies below the global one");

  CrossingPrediction p;
  p.E_gap = el - eg;
  p.chi_G = global.chi;
  p.chi_L = local.chi;
  p.f = std::numeric_limits<int>::max();
  for (const auto& l : local.cluster.members)
    for (const auto& g : global.cluster.members)
      p.f = std::min(p.f, std::popcount(l.bits ^ g.bits));

  if (!(p.chi_L > p.chi_G)) {
    p.reason = CrossingStatus::no_real_solution;
    return p;
  }
  const double ls = 1.0 / (1.0 + std::sqrt(p.E_gap / (p.chi_L - p.chi_G)));
  p.lambda_star = ls;
  if (ls <= scale.lambda_c) {
    p.reason = CrossingStatus::below_lambda_c;
    return p;
  }
  p.prefactor_lambda = prefactor_lambda.value_or(ls);
  try {
    const auto c = effective_coupling(problem, global.cluster, local.cluster,
                                      p.prefactor_lambda);
    p.coupling_LG = c.coupling_LG;
    p.coupling_GL = c.coupling_GL;
  } catch (const DegeneracyError&) {
    p.reason = CrossingStatus::degenerate_path;
    return p;
  }
  p.g_min_predicted = predicted_min_gap(p.coupling_LG, p.coupling_GL);
  p.valid = true;
  return p;
}

}  // namespace aqc
