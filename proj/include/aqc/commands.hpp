#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "aqc/perturbation.hpp"
#include "aqc/report.hpp"
#include "aqc/sweep.hpp"
#include "aqc/wmis.hpp"

namespace aqc {

enum class Command { sweep, minima, predict, compare, fig2_scan };
enum class PrefactorMode { perturbative, exact };

struct WlRange {
  double lo = 1.5;
  double hi = 1.98;
  double step = 0.02;
};

inline constexpr int kMinGridPoints = 11;

struct RunConfig {
  Command command = Command::sweep;
  std::optional<std::filesystem::path> instance;
  std::optional<Fig2Params> fig2;
  std::optional<double> delta;
  int grid = 0;  // 0: 401 for sweep, 101 for the anticrossing search
  bool refine = false;
  int k = 3;
  std::optional<WlRange> wl_range;
  int jobs = 1;
  std::uint64_t seed = SolverOptions{}.seed;
  std::filesystem::path out = ".";
  PrefactorMode prefactor = PrefactorMode::perturbative;
  int clusters = 1;  // local clusters to evaluate in predict
  std::optional<double> energy_scale;
};

/// Runs one command; returns the process exit code (0 ok, 2 input or I/O
/// failure, 3 solver failure). Diagnostics go to `err`, the one-line summary
/// to `out`.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

/// lo, lo + step, ... up to hi (inclusive within step / 1000).
std::vector<double> expand_range(const WlRange& range);

/// Coarse gap sweep followed by refinement of the deepest interior minimum.
AnticrossingReport find_anticrossing(const IsingProblem& problem, int grid_points,
                                     const SolverOptions& solver = {});

/// Perturbative predictions for the global cluster against the `count`
/// lowest local clusters. Empty when the landscape has no local minima.
std::vector<CrossingPrediction> predict_local_clusters(
    const IsingProblem& problem, int count, std::optional<double> prefactor_lambda = {},
    std::optional<double> energy_scale = {});

/// Exact and perturbative anticrossing of one instance of the 15-vertex test family. Errors are
/// caught and reported in `status` with NaN in the affected columns.
CompareRow compare_point(const Fig2Params& params, double delta, int grid_points,
                         const SolverOptions& solver = {});

/// compare_point over a w_L range on up to `jobs` threads; rows in w_L order.
std::vector<CompareRow> compare_scan(Fig2Params base, const WlRange& range, double delta,
                                     int grid_points, int jobs,
                                     const SolverOptions& solver = {});

}  // namespace aqc
