#include "aqc/wmis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "aqc/errors.hpp"

namespace aqc {

WeightedGraph::WeightedGraph(std::vector<double> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)) {
  const int n = n_vertices();
  if (n < 1) throw InputError("graph needs at least one vertex");
  if (n > kMaxQubits)
    throw CapacityError("vertex count must be at most " + std::to_string(kMaxQubits));
  for (int i = 0; i < n; ++i)
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
      throw InputError("weight of vertex " + std::to_string(i) + " must be positive");
  adjacency_masks_.assign(n, 0u);
  for (auto& [i, j] : edges_) {
    if (i == j) throw InputError("self-loop on vertex " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n)
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [i, j] : edges_) {
    adjacency_masks_[i] |= 1u << j;
    adjacency_masks_[j] |= 1u << i;
  }
}

bool WeightedGraph::adjacent(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_vertices() || j >= n_vertices())
    throw InputError("vertex index out of range");
  return (adjacency_masks_[i] >> j) & 1u;
}

int WeightedGraph::degree(int i) const {
  if (i < 0 || i >= n_vertices()) throw InputError("vertex index out of range");
  return std::popcount(adjacency_masks_[i]);
}

namespace {

struct WmisSearch {
  const WeightedGraph& g;
  std::vector<std::uint32_t> masks;
  WmisSolution best;
  bool any = false;

  double weight_of(std::uint32_t set) const {
    double w = 0.0;
    for (int i = 0; i < g.n_vertices(); ++i)
      if ((set >> i) & 1u) w += g.weights()[i];
    return w;
  }

  // Vertices below `next` are decided; `blocked` marks neighbors of the set.
  void visit(int next, std::uint32_t set, std::uint32_t blocked) {
    if (next == g.n_vertices()) {
      const double w = weight_of(set);
      if (!any || (w > best.best_weight && !energies_degenerate(best.best_weight, w))) {
        best.best_sets.assign(1, set);
        best.best_weight = w;
        any = true;
      } else if (energies_degenerate(best.best_weight, w)) {
        best.best_sets.push_back(set);
      }
      return;
    }
    visit(next + 1, set, blocked);
    if (!((blocked >> next) & 1u))
      visit(next + 1, set | (1u << next), blocked | masks[next]);
  }
};

}  // namespace

WmisSolution brute_force_wmis(const WeightedGraph& graph) {
  WmisSearch search{graph, {}, {}, false};
  search.masks.resize(graph.n_vertices());
  for (int i = 0; i < graph.n_vertices(); ++i)
    for (int j = 0; j < graph.n_vertices(); ++j)
      if (i != j && graph.adjacent(i, j)) search.masks[i] |= 1u << j;
  search.visit(0, 0u, 0u);
  std::sort(search.best.best_sets.begin(), search.best.best_sets.end());
  return search.best;
}

IsingProblem to_ising(const WeightedGraph& graph, const CouplingRule& rule,
                      double delta) {
  const auto& edges = graph.edges();
  if (!rule.uniform && rule.per_edge.size() != edges.size())
    throw InputError("coupling rule needs a uniform J or one value per edge");
  std::vector<double> h(graph.n_vertices(), 0.0);
  std::vector<Coupling> couplings;
  couplings.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    const double J = rule.uniform ? *rule.uniform : rule.per_edge[e];
    const double wmin = std::min(graph.weights()[i], graph.weights()[j]);
    if (!(J > wmin))
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") violates J > min(w_i, w_j)");
    h[i] += J;
    h[j] += J;
    couplings.push_back({i, j, J});
  }
  for (int i = 0; i < graph.n_vertices(); ++i) h[i] -= 2.0 * graph.weights()[i];
  return IsingProblem(graph.n_vertices(), std::move(h), std::move(couplings), delta);
}

void Fig2Params::validate() const {
  if (!(w_G > 0.0) || !(w_L > 0.0) || !(J > 0.0))
    throw InputError("fig2 parameters must be positive");
  if (!(J > std::min(w_G, w_L)))
    throw InputError("fig2 parameters need J > min(w_G, w_L)");
  if (!(w_L < 2.0 * w_G))
    throw InputError("fig2 parameters need w_L < 2 w_G");
}

WeightedGraph fig2_instance(const Fig2Params& params) {
  params.validate();
  std::vector<double> weights(15, params.w_L);
  std::fill(weights.begin(), weights.begin() + 6, params.w_G);
  const int triangles[3][3] = {{6, 7, 8}, {9, 10, 11}, {12, 13, 14}};
  // Central pair c -> the two triangles it is fully joined to.
  const int central_triangles[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<WeightedGraph::Edge> edges;
  for (int pair = 0; pair < 3; ++pair)
    for (int c = 2 * pair; c < 2 * pair + 2; ++c)
      for (int t : central_triangles[pair])
        for (int v : triangles[t]) edges.emplace_back(c, v);
  for (const auto& tri : triangles) {
    edges.emplace_back(tri[0], tri[1]);
    edges.emplace_back(tri[0], tri[2]);
    edges.emplace_back(tri[1], tri[2]);
  }
  return WeightedGraph(std::move(weights), std::move(edges));
}

IsingProblem fig2_problem(const Fig2Params& params, double delta) {
  return to_ising(fig2_instance(params), CouplingRule{params.J, {}}, delta);
}

Fig2ClosedForms fig2_closed_forms(const Fig2Params& params) {
  if (!(params.w_G > 0.0 && params.w_L > 0.0 && params.J > 0.0))
    throw InputError("fig2 parameters must be positive");
  const double wG = params.w_G, wL = params.w_L, J = params.J;
  const double d1 = 4.0 * J - wL, d2 = 2.0 * J - wG, d3 = J - wL;
  if (d1 == 0.0 || d2 == 0.0 || d3 == 0.0)
    throw DomainError("fig2 closed forms are singular at these parameters");
  Fig2ClosedForms out;
  out.E_gap = 4.0 * (6.0 * wG - 3.0 * wL);
  out.chi_G = 0.25 * (6.0 / wG + 9.0 / d1);
  out.chi_L = 0.25 * (6.0 / d2 + 9.0 / wL + 12.0 / d3);
  out.deltaU = 4.0 * d3;
  return out;
}

namespace {

double graph_real(std::string_view tok, int line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
  return v;
}

int graph_int(std::string_view tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int nv = -1;
  std::vector<double> weights;
  std::vector<bool> weight_set;
  std::vector<WeightedGraph::Edge> edges;
  std::optional<double> j_uniform;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    const auto& key = toks[0];
    auto arity = [&](std::size_t n) {
      if (toks.size() != n)
        throw ParseError(line_no, "directive '" + key + "' takes " +
                                      std::to_string(n - 1) + " argument(s)");
    };
    if (nv < 0 && key != "nv")
      throw ParseError(line_no, "first directive must be 'nv <vertices>'");
    if (key == "nv") {
      if (nv >= 0) throw ParseError(line_no, "vertex count given twice");
      arity(2);
      nv = graph_int(toks[1], line_no);
      if (nv < 1 || nv > kMaxQubits)
        throw ParseError(line_no, "vertex count must be in 1.." + std::to_string(kMaxQubits));
      weights.assign(nv, 1.0);
      weight_set.assign(nv, false);
    } else if (key == "w") {
      arity(3);
      int i = graph_int(toks[1], line_no);
      if (i < 0 || i >= nv) throw ParseError(line_no, "vertex index out of range");
      if (weight_set[i]) throw ParseError(line_no, "duplicate weight for vertex " + toks[1]);
      weights[i] = graph_real(toks[2], line_no);
      if (!(weights[i] > 0.0)) throw ParseError(line_no, "weights must be positive");
      weight_set[i] = true;
    } else if (key == "e") {
      arity(3);
      int i = graph_int(toks[1], line_no), j = graph_int(toks[2], line_no);
      if (i < 0 || j < 0 || i >= nv || j >= nv)
        throw ParseError(line_no, "vertex index out of range");
      if (i == j) throw ParseError(line_no, "self-loop on vertex " + toks[1]);
      const WeightedGraph::Edge e{std::min(i, j), std::max(i, j)};
      if (std::find(edges.begin(), edges.end(), e) != edges.end())
        throw ParseError(line_no, "duplicate edge");
      edges.push_back(e);
    } else if (key == "Juniform") {
      arity(2);
      j_uniform = graph_real(toks[1], line_no);
    } else {
      throw ParseError(line_no, "unknown directive '" + key + "'");
    }
  }
  if (nv < 0) throw ParseError(line_no, "missing 'nv' directive");
  return {WeightedGraph(std::move(weights), std::move(edges)), j_uniform};
}

GraphFile load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace aqc
