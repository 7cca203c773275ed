#include "aqc/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "aqc/errors.hpp"
#include "aqc/minima.hpp"
#include "aqc/svg.hpp"

namespace aqc {

namespace {

constexpr int kDefaultSweepGrid = 401;
constexpr int kDefaultSearchGrid = 101;

std::string short_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

IsingProblem load_problem(const RunConfig& c) {
  if (c.instance.has_value() == c.fig2.has_value())
    throw InputError("give exactly one of --instance or --fig2");
  if (c.fig2) return fig2_problem(*c.fig2, c.delta.value_or(1.0));
  auto p = load_instance(*c.instance);
  return c.delta ? p.with_delta(*c.delta) : p;
}

int grid_points(const RunConfig& c, int fallback) {
  const int n = c.grid == 0 ? fallback : c.grid;
  if (n < kMinGridPoints)
    throw InputError("grid needs at least " + std::to_string(kMinGridPoints) + " points");
  return n;
}

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions s;
  s.seed = c.seed;
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot write " + path.string());
  os << text;
  os.flush();
  if (!os) throw IoError("write failed for " + path.string());
}

template <typename F>
std::string capture(F&& f) {
  std::ostringstream os;
  f(os);
  return os.str();
}

std::string sanitize(std::string s) {
  for (char& ch : s)
    if (ch == ',' || ch == '\n') ch = ';';
  return s;
}

std::string cmd_sweep(const RunConfig& c) {
  if (c.k < 2) throw InputError("sweep needs k >= 2");
  const auto problem = load_problem(c);
  const auto grid = uniform_grid(grid_points(c, kDefaultSweepGrid));
  SweepOptions opts;
  opts.k = c.k;
  opts.solver = solver_options(c);
  const auto result = sweep(problem, grid, opts);

  write_file(c.out / "sweep.csv", capture([&](std::ostream& os) { write_sweep_csv(os, result); }));

  std::vector<Series> levels;
  for (int i = 0; i < c.k; ++i) {
    Series s{"E" + std::to_string(i), {}, {}};
    for (const auto& r : result.rows) {
      s.x.push_back(r.lambda);
      s.y.push_back(r.energies[i]);
    }
    levels.push_back(std::move(s));
  }
  write_file(c.out / "levels.svg",
             render_line_chart({"Lowest levels", "λ", "energy"}, levels));

  Series gap{"gap", {}, {}}, S{"S", {}, {}}, M{"M", {}, {}};
  for (const auto& r : result.rows) {
    gap.x.push_back(r.lambda);
    gap.y.push_back(r.gap);
    S.x.push_back(r.lambda);
    S.y.push_back(r.S);
    M.x.push_back(r.lambda);
    M.y.push_back(r.M);
  }
  write_file(c.out / "order.svg", render_line_chart({"Order parameters", "λ", "S, M"}, {S, M}));
  write_file(c.out / "gap.svg", render_line_chart({"Gap", "λ", "gap", true}, {gap}));

  const auto minima = result.gap_local_minima();
  std::string summary = "sweep: " + std::to_string(result.rows.size()) + " points, " +
                        std::to_string(minima.size()) + " gap minima";
  if (c.refine) {
    if (minima.empty()) throw InputError("no interior gap minimum to refine");
    const auto deepest = *std::min_element(minima.begin(), minima.end(), [&](auto a, auto b) {
      return result.rows[a].gap < result.rows[b].gap;
    });
    RefineOptions ro;
    ro.solver = opts.solver;
    const auto rep =
        refine_minimum_gap(problem, {grid[deepest - 1], grid[deepest + 1]}, ro);
    write_file(c.out / "anticrossing.csv",
               capture([&](std::ostream& os) { write_anticrossing_csv(os, rep); }));
    write_file(c.out / "anticrossing.txt",
               capture([&](std::ostream& os) { write_anticrossing_text(os, rep); }));
    summary += ", g_min=" + short_real(rep.g_min) + " at lambda=" + short_real(rep.lambda_star_exact);
  }
  return summary + " -> " + (c.out / "sweep.csv").string();
}

std::string cmd_minima(const RunConfig& c) {
  const auto problem = load_problem(c);
  const auto clusters = enumerate_minima(problem);
  write_file(c.out / "minima.csv",
             capture([&](std::ostream& os) { write_minima_csv(os, clusters); }));
  return "minima: " + std::to_string(clusters.size()) + " clusters, global energy " +
         short_real(clusters.front().energy) + " -> " + (c.out / "minima.csv").string();
}

std::string cmd_predict(const RunConfig& c) {
  if (c.clusters < 1) throw InputError("--clusters must be positive");
  const auto problem = load_problem(c);
  std::optional<double> exact_lambda;
  if (c.prefactor == PrefactorMode::exact)
    exact_lambda =
        find_anticrossing(problem, grid_points(c, kDefaultSearchGrid), solver_options(c))
            .lambda_star_exact;
  const auto rows = predict_local_clusters(problem, c.clusters, exact_lambda, c.energy_scale);

  std::string csv = std::string(kPredictionHeader) + '\n';
  for (const auto& p : rows) csv += prediction_csv_row(p) + '\n';
  if (rows.empty()) csv += "# reason=no_local_minima\n";
  write_file(c.out / "prediction.csv", csv);
  if (!rows.empty())
    write_file(c.out / "prediction.txt",
               capture([&](std::ostream& os) { write_prediction_text(os, rows.front()); }));

  if (rows.empty()) return "predict: no local minima, no first-order crossing predicted";
  const auto& p = rows.front();
  std::string s = "predict: " + std::to_string(rows.size()) + " candidate(s); lowest: ";
  if (p.valid)
    s += "lambda*=" + short_real(*p.lambda_star) + " f=" + std::to_string(p.f) +
         " gmin_pred=" + short_real(p.g_min_predicted);
  else
    s += "invalid (" + std::string(to_string(p.reason)) + ")";
  return s + " -> " + (c.out / "prediction.csv").string();
}

Fig2Params require_fig2(const RunConfig& c) {
  if (!c.fig2) throw InputError("this command needs --fig2 wG,wL,J");
  if (c.instance) throw InputError("--instance is not accepted by this command");
  return *c.fig2;
}

std::string cmd_compare(const RunConfig& c) {
  const auto base = require_fig2(c);
  const auto range = c.wl_range.value_or(WlRange{});
  const auto rows = compare_scan(base, range, c.delta.value_or(1.0),
                                 grid_points(c, kDefaultSearchGrid), c.jobs, solver_options(c));
  write_file(c.out / "compare.csv", capture([&](std::ostream& os) { write_compare_csv(os, rows); }));

  Series ge{"exact", {}, {}}, gp{"perturbative λ*", {}, {}}, gx{"exact λ*", {}, {}};
  Series le{"exact", {}, {}}, lp{"perturbative", {}, {}};
  for (const auto& r : rows) {
    for (auto* s : {&ge, &gp, &gx, &le, &lp}) s->x.push_back(r.w_L);
    ge.y.push_back(r.g_min_exact);
    gp.y.push_back(r.g_min_pert);
    gx.y.push_back(r.g_min_pert_at_exact);
    le.y.push_back(r.lambda_star_exact);
    lp.y.push_back(r.lambda_star_pert);
  }
  write_file(c.out / "gmin.svg", render_line_chart({"Minimum gap", "w_L", "gap", true}, {ge, gp, gx}));
  write_file(c.out / "lambdastar.svg",
             render_line_chart({"Anticrossing position", "w_L", "λ*"}, {le, lp}));

  const auto failed = std::count_if(rows.begin(), rows.end(),
                                    [](const CompareRow& r) { return r.status != "ok"; });
  return "compare: " + std::to_string(rows.size()) + " points, " + std::to_string(failed) +
         " failed -> " + (c.out / "compare.csv").string();
}

std::string cmd_fig2_scan(const RunConfig& c) {
  auto params = require_fig2(c);
  const double delta = c.delta.value_or(1.0);
  std::string csv = std::string("w_L,") + kPredictionHeader + '\n';
  int failed = 0;
  const auto wl = expand_range(c.wl_range.value_or(WlRange{}));
  for (double w : wl) {
    params.w_L = w;
    std::string row;
    try {
      const auto rows = predict_local_clusters(fig2_problem(params, delta), 1, {}, c.energy_scale);
      row = rows.empty() ? std::string("nan,nan,nan,nan,0,nan,nan,nan,false,no_local_minima")
                         : prediction_csv_row(rows.front());
    } catch (const Error& e) {
      ++failed;
      row = "nan,nan,nan,nan,0,nan,nan,nan,false," + sanitize(e.what());
    }
    csv += format_real(w) + ',' + row + '\n';
  }
  write_file(c.out / "fig2_scan.csv", csv);
  return "fig2-scan: " + std::to_string(wl.size()) + " points, " + std::to_string(failed) +
         " failed -> " + (c.out / "fig2_scan.csv").string();
}

}  // namespace

std::vector<double> expand_range(const WlRange& r) {
  if (!(r.step > 0.0) || !(r.hi >= r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
    throw InputError("range needs lo <= hi and step > 0");
  std::vector<double> out;
  for (long i = 0;; ++i) {
    const double x = r.lo + static_cast<double>(i) * r.step;
    if (x > r.hi + r.step * 1e-3) break;
    out.push_back(std::min(x, r.hi));
    if (out.size() > 100000) throw InputError("range has too many points");
  }
  return out;
}

AnticrossingReport find_anticrossing(const IsingProblem& problem, int grid_points,
                                     const SolverOptions& solver) {
  if (grid_points < kMinGridPoints)
    throw InputError("grid needs at least " + std::to_string(kMinGridPoints) + " points");
  const auto grid = uniform_grid(grid_points);
  SweepOptions opts;
  opts.k = 2;
  opts.solver = solver;
  const auto result = sweep(problem, grid, opts);
  const auto minima = result.gap_local_minima();
  if (minima.empty()) throw InputError("gap has no interior minimum on the grid");
  const auto deepest = *std::min_element(minima.begin(), minima.end(), [&](auto a, auto b) {
    return result.rows[a].gap < result.rows[b].gap;
  });
  RefineOptions ro;
  ro.solver = solver;
  return refine_minimum_gap(problem, {grid[deepest - 1], grid[deepest + 1]}, ro);
}

std::vector<CrossingPrediction> predict_local_clusters(const IsingProblem& problem, int count,
                                                       std::optional<double> prefactor_lambda,
                                                       std::optional<double> energy_scale) {
  const auto clusters = enumerate_minima(problem);
  std::vector<CrossingPrediction> out;
  if (clusters.size() < 2) return out;
  const auto scale = scale_and_zeta(problem, 0.5, energy_scale).first;
  const auto global = chi(problem, clusters.front());
  const int n = std::min<int>(count, static_cast<int>(clusters.size()) - 1);
  for (int i = 1; i <= n; ++i)
    out.push_back(predict_crossing(problem, global, chi(problem, clusters[i]), scale,
                                   prefactor_lambda));
  return out;
}

CompareRow compare_point(const Fig2Params& params, double delta, int grid_points,
                         const SolverOptions& solver) {
  CompareRow row;
  row.w_L = params.w_L;
  std::string status;
  try {
    const auto problem = fig2_problem(params, delta);
    try {
      const auto pred = predict_local_clusters(problem, 1);
      if (pred.empty()) {
        status += "no_local_minima;";
      } else if (pred.front().lambda_star) {
        row.lambda_star_pert = *pred.front().lambda_star;
        row.g_min_pert = pred.front().g_min_predicted;
        if (!pred.front().valid) status += std::string(to_string(pred.front().reason)) + ';';
      } else {
        status += std::string(to_string(pred.front().reason)) + ';';
      }
    } catch (const Error& e) {
      status += sanitize(e.what()) + ';';
    }
    try {
      const auto rep = find_anticrossing(problem, grid_points, solver);
      row.lambda_star_exact = rep.lambda_star_exact;
      row.g_min_exact = rep.g_min;
      row.evaluations = rep.evaluations;
      const auto at = predict_local_clusters(problem, 1, rep.lambda_star_exact);
      if (!at.empty() && at.front().valid) row.g_min_pert_at_exact = at.front().g_min_predicted;
    } catch (const Error& e) {
      status += sanitize(e.what()) + ';';
    }
  } catch (const Error& e) {
    status += sanitize(e.what()) + ';';
  }
  if (!status.empty()) {
    status.pop_back();
    row.status = status;
  }
  return row;
}

std::vector<CompareRow> compare_scan(Fig2Params base, const WlRange& range, double delta,
                                     int grid_points, int jobs, const SolverOptions& solver) {
  if (jobs < 1) throw InputError("--jobs must be positive");
  const auto wl = expand_range(range);
  std::vector<CompareRow> rows(wl.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < wl.size();) {
      Fig2Params p = base;
      p.w_L = wl[i];
      rows[i] = compare_point(p, delta, grid_points, solver);
    }
  };
  const int threads = std::min<int>(jobs, static_cast<int>(wl.size()));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string summary;
    switch (config.command) {
      case Command::sweep: summary = cmd_sweep(config); break;
      case Command::minima: summary = cmd_minima(config); break;
      case Command::predict: summary = cmd_predict(config); break;
      case Command::compare: summary = cmd_compare(config); break;
      case Command::fig2_scan: summary = cmd_fig2_scan(config); break;
    }
    out << summary << '\n';
    return 0;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace aqc
