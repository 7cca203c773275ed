#pragma once

#include <filesystem>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "aqc/ising.hpp"

namespace aqc {

class WeightedGraph {
 public:
  using Edge = std::pair<int, int>;

  WeightedGraph(std::vector<double> weights, std::vector<Edge> edges);

  int n_vertices() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  /// Normalized (i < j), sorted, unique.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(int i, int j) const;
  int degree(int i) const;

 private:
  std::vector<double> weights_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> adjacency_masks_;
};

struct WmisSolution {
  /// Maximizers as vertex bitmasks, ascending.
  std::vector<std::uint32_t> best_sets;
  double best_weight = 0.0;
};

/// Exhaustive search over independent sets; n_vertices <= kMaxQubits.
WmisSolution brute_force_wmis(const WeightedGraph& graph);

/// Either one coupling for every edge or one value per edge (edge order).
struct CouplingRule {
  std::optional<double> uniform;
  std::vector<double> per_edge;
};

/// h_i = sum_(ij in E) J_ij - 2 w_i, couplings J_ij on the edges. Spin +1
/// means "in the set". Requires J_ij > min(w_i, w_j) on every edge.
IsingProblem to_ising(const WeightedGraph& graph, const CouplingRule& rule,
                      double delta);

/// The 15-vertex test graph: centrals 0..5 (weight w_G, pairwise
/// non-adjacent) and triangles T1 = {6,7,8}, T2 = {9,10,11},
/// T3 = {12,13,14} (weight w_L). Centrals 0,1 see T1 and T2, 2,3 see T1 and
/// T3, 4,5 see T2 and T3, so each central touches six outer vertices and
/// each outer vertex four centrals.
struct Fig2Params {
  double w_G = 1.0;
  double w_L = 1.8;
  double J = 2.0;

  /// Throws InputError unless J > min(w_G, w_L), w_L < 2 w_G, weights > 0.
  void validate() const;
};

WeightedGraph fig2_instance(const Fig2Params& params);

/// Convenience: fig2_instance followed by to_ising with uniform J.
IsingProblem fig2_problem(const Fig2Params& params, double delta);

struct Fig2ClosedForms {
  double E_gap;   // E_L - E_G of the classical problem
  double chi_G;   // in units of delta^2
  double chi_L;
  double deltaU;  // barrier between neighboring local minima
};

/// Closed-form energies and curvatures of the test family (delta = 1
/// units; multiply chi by delta^2). Only positivity is required, so the
/// w_L = 2 w_G boundary evaluates; vanishing denominators throw DomainError.
Fig2ClosedForms fig2_closed_forms(const Fig2Params& params);

/// Reads `nv <n>`, `w <i> <float>`, `e <i> <j>` and optional
/// `Juniform <float>`; '#' comments. Returns the graph and the uniform J.
struct GraphFile {
  WeightedGraph graph;
  std::optional<double> j_uniform;
};
GraphFile parse_graph(std::string_view text);
GraphFile load_graph(const std::filesystem::path& path);

}  // namespace aqc
