#include "aqc/sweep.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <memory>

#include "aqc/errors.hpp"
#include "aqc/hamiltonian.hpp"

namespace aqc {

OrderParameters order_parameters(std::span<const double> ground) {
  const std::size_t dim = ground.size();
  if (dim < 2 || !std::has_single_bit(dim))
    throw InputError("state length must be 2^N with N >= 1");
  const int n = std::countr_zero(dim);
  double norm2 = 0.0, l1 = 0.0, mag = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    const double p = ground[s] * ground[s];
    norm2 += p;
    l1 += std::abs(ground[s]);
    mag += p * (2 * std::popcount(s) - n);
  }
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
    throw InputError("state is not normalized");
  return {l1 * l1 / static_cast<double>(dim), mag / n};
}

std::vector<std::size_t> SweepResult::gap_local_minima() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    if (rows[i].gap < rows[i - 1].gap && rows[i].gap < rows[i + 1].gap)
      out.push_back(i);
  return out;
}

std::vector<double> uniform_grid(int points, double lo, double hi) {
  if (points < 1) throw InputError("grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  g.back() = hi;
  return g;
}

std::uint64_t problem_hash(const IsingProblem& problem) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : format_instance(problem)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

SweepResult sweep(const IsingProblem& problem, std::span<const double> grid,
                  const SweepOptions& options) {
  if (grid.empty()) throw InputError("empty lambda grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
      throw InputError("grid point outside [0, 1]");
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw InputError("grid must be strictly increasing");
  }
  if (options.k < 1 || options.k > kMaxEigenpairs)
    throw InputError("k must be in 1.." + std::to_string(kMaxEigenpairs));

  const int nev = std::max(options.k, 2);
  auto landscape = std::make_shared<ClassicalLandscape>(problem);
  SweepResult result;
  result.k = options.k;
  result.problem_hash = problem_hash(problem);
  char spec[96];
  std::snprintf(spec, sizeof spec, "%zu points in [%.17g, %.17g]", grid.size(),
                grid.front(), grid.back());
  result.grid = spec;

  std::vector<std::vector<double>> warm;
  for (double lambda : grid) {
    InterpolatedHamiltonian h(landscape, lambda);
    EigenResult eig;
    try {
      eig = lowest_eigenpairs(h, nev, options.solver, warm);
    } catch (const SolverError& e) {
      char msg[64];
      std::snprintf(msg, sizeof msg, " (at lambda=%.17g)", lambda);
      throw SolverError(e.what() + std::string(msg), e.residuals());
    }
    SweepRow row;
    row.lambda = lambda;
    row.energies.assign(eig.eigenvalues.begin(), eig.eigenvalues.begin() + options.k);
    row.gap = eig.eigenvalues[1] - eig.eigenvalues[0];
    const auto op = order_parameters(eig.eigenvectors[0]);
    row.S = op.S;
    row.M = op.M;
    result.rows.push_back(std::move(row));
    if (options.warm_start) warm = std::move(eig.eigenvectors);
  }
  return result;
}

namespace {

class GapFunction {
 public:
  GapFunction(const IsingProblem& problem, const SolverOptions& solver)
      : landscape_(std::make_shared<ClassicalLandscape>(problem)), solver_(solver) {}

  double operator()(double lambda) {
    InterpolatedHamiltonian h(landscape_, lambda);
    EigenResult eig;
    try {
      eig = lowest_eigenpairs(h, 2, solver_, warm_);
    } catch (const SolverError& e) {
      char msg[64];
      std::snprintf(msg, sizeof msg, " (at lambda=%.17g)", lambda);
      throw SolverError(e.what() + std::string(msg), e.residuals());
    }
    warm_ = std::move(eig.eigenvectors);
    ++evaluations_;
    return eig.eigenvalues[1] - eig.eigenvalues[0];
  }

  int evaluations() const noexcept { return evaluations_; }

 private:
  std::shared_ptr<const ClassicalLandscape> landscape_;
  SolverOptions solver_;
  std::vector<std::vector<double>> warm_;
  int evaluations_ = 0;
};

struct Probe {
  double x;
  double g;
};

}  // namespace

double gap_at(const IsingProblem& problem, double lambda,
              const SolverOptions& solver) {
  GapFunction g(problem, solver);
  return g(lambda);
}

AnticrossingReport refine_minimum_gap(const IsingProblem& problem,
                                      std::pair<double, double> bracket,
                                      const RefineOptions& options) {
  auto [lo, hi] = bracket;
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi))
    throw InputError("bracket must satisfy 0 <= lo < hi <= 1");

  GapFunction gap(problem, options.solver);
  constexpr double kInvPhi = 0.6180339887498949;

  Probe a{lo, gap(lo)};
  Probe b{hi, gap(hi)};
  Probe c{hi - kInvPhi * (hi - lo), 0.0};
  Probe d{lo + kInvPhi * (hi - lo), 0.0};
  c.g = gap(c.x);
  d.g = gap(d.x);

  auto below_ends = [&](const Probe& p) { return p.g < a.g && p.g < b.g; };
  if (!below_ends(c) && !below_ends(d)) {
    // Golden probes missed a narrow dip; look on a finer uniform comb.
    constexpr int kComb = 16;
    std::vector<Probe> comb{a};
    for (int i = 1; i < kComb; ++i) {
      const double x = lo + (hi - lo) * i / kComb;
      comb.push_back({x, gap(x)});
    }
    comb.push_back(b);
    auto best = std::min_element(comb.begin() + 1, comb.end() - 1,
                                 [](const Probe& p, const Probe& q) { return p.g < q.g; });
    if (!below_ends(*best))
      throw InputError("no interior gap minimum inside the bracket");
    a = *(best - 1);
    b = *(best + 1);
    c = {b.x - kInvPhi * (b.x - a.x), 0.0};
    d = {a.x + kInvPhi * (b.x - a.x), 0.0};
    c.g = gap(c.x);
    d.g = gap(d.x);
  }

  while (b.x - a.x > options.lambda_tolerance) {
    if (c.g < d.g) {
      b = d;
      d = c;
      c = {b.x - kInvPhi * (b.x - a.x), 0.0};
      c.g = gap(c.x);
    } else {
      a = c;
      c = d;
      d = {a.x + kInvPhi * (b.x - a.x), 0.0};
      d.g = gap(d.x);
    }
  }

  Probe best = c.g < d.g ? c : d;
  // Parabola through g^2 at the three probes around the minimum.
  const Probe& left = c.g < d.g ? a : c;
  const Probe& right = c.g < d.g ? d : b;
  const double x0 = left.x, x1 = best.x, x2 = right.x;
  const double y0 = left.g * left.g, y1 = best.g * best.g, y2 = right.g * right.g;
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den != 0.0) {
    const double xv = x1 - 0.5 * num / den;
    if (xv > a.x && xv < b.x && xv != x1) {
      const double gv = gap(xv);
      if (gv < best.g) best = {xv, gv};
    }
  }

  AnticrossingReport report;
  report.lambda_star_exact = best.x;
  report.g_min = best.g;
  report.bracket = {a.x, b.x};
  report.evaluations = gap.evaluations();
  return report;
}

double max_local_scale(const IsingProblem& problem) {
  double best = 0.0;
  for (int i = 0; i < problem.n_qubits(); ++i) {
    double s = std::abs(problem.h()[i]);
    for (const auto& nb : problem.neighbors(i)) s += std::abs(nb.coupling);
    best = std::max(best, s);
  }
  return best;
}

std::pair<ScaleEstimate, double> scale_and_zeta(const IsingProblem& problem,
                                                double lambda,
                                                std::optional<double> user_value) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw InputError("lambda must lie in [0, 1]");
  ScaleEstimate est;
  if (user_value) {
    if (!(*user_value > 0.0)) throw InputError("energy scale must be positive");
    est.calE = *user_value;
    est.rule = ScaleRule::user_supplied;
  } else {
    est.calE = max_local_scale(problem);
    est.rule = ScaleRule::max_local_scale;
    if (!(est.calE > 0.0))
      throw DomainError("problem Hamiltonian is empty; energy scale undefined");
  }
  const double delta = problem.delta();
  est.lambda_c = delta / (delta + est.calE);
  const double zeta = lambda == 0.0
                          ? std::numeric_limits<double>::infinity()
                          : (1.0 - lambda) * delta / (lambda * est.calE);
  return {est, zeta};
}

}  // namespace aqc
