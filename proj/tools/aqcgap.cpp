#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aqc/commands.hpp"

namespace {

std::vector<double> split_reals(const std::string& text, char sep) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = text.find(sep, pos);
    const std::string item = text.substr(pos, end - pos);
    double v = 0.0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || p != item.data() + item.size() || item.empty())
      throw CLI::ValidationError("cannot parse number '" + item + "'");
    out.push_back(v);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and perturbative analysis of first-order anticrossings"};
  app.require_subcommand(1);

  aqc::RunConfig cfg;
  std::string instance, fig2, wl_range, prefactor = "perturbative";
  double delta = 0.0;

  auto add_common = [&](CLI::App* sub) {
    auto* inst = sub->add_option("--instance", instance, "Ising instance file");
    auto* f2 = sub->add_option("--fig2", fig2, "15-vertex test family weights and coupling wG,wL,J");
    inst->excludes(f2);
    sub->add_option("--delta", delta, "transverse field amplitude")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "solver start-vector seed");
    sub->add_option("--out", cfg.out, "output directory");
    sub->add_option("--energy-scale", cfg.energy_scale, "override the H_P energy scale");
  };
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--grid", cfg.grid, "lambda grid points (>= 11)");
  };

  auto* sweep = app.add_subcommand("sweep", "lowest levels, gap, S and M over lambda");
  add_common(sweep);
  add_grid(sweep);
  sweep->add_option("-k", cfg.k, "eigenpairs per point");
  sweep->add_flag("--refine", cfg.refine, "refine the deepest gap minimum");

  auto* minima = app.add_subcommand("minima", "classical local-minimum clusters");
  add_common(minima);

  auto* predict = app.add_subcommand("predict", "perturbative crossing and gap");
  add_common(predict);
  add_grid(predict);
  predict->add_option("--clusters", cfg.clusters, "local clusters to evaluate");
  predict->add_option("--prefactor", prefactor, "lambda used in the tunneling prefactor")
      ->check(CLI::IsMember({"exact", "perturbative"}));

  auto* compare = app.add_subcommand("compare", "exact versus perturbative over w_L");
  add_common(compare);
  add_grid(compare);
  compare->add_option("--wl-range", wl_range, "lo:hi:step");
  compare->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("fig2-scan", "perturbative prediction over w_L");
  add_common(scan);
  scan->add_option("--wl-range", wl_range, "lo:hi:step");

  try {
    app.parse(argc, argv);
    if (!instance.empty()) cfg.instance = instance;
    if (!fig2.empty()) {
      const auto v = split_reals(fig2, ',');
      if (v.size() != 3) throw CLI::ValidationError("--fig2 needs wG,wL,J");
      cfg.fig2 = aqc::Fig2Params{v[0], v[1], v[2]};
    }
    if (delta > 0.0) cfg.delta = delta;
    if (!wl_range.empty()) {
      const auto v = split_reals(wl_range, ':');
      if (v.size() != 3) throw CLI::ValidationError("--wl-range needs lo:hi:step");
      cfg.wl_range = aqc::WlRange{v[0], v[1], v[2]};
    }
    cfg.prefactor =
        prefactor == "exact" ? aqc::PrefactorMode::exact : aqc::PrefactorMode::perturbative;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sweep->parsed()) cfg.command = aqc::Command::sweep;
  else if (minima->parsed()) cfg.command = aqc::Command::minima;
  else if (predict->parsed()) cfg.command = aqc::Command::predict;
  else if (compare->parsed()) cfg.command = aqc::Command::compare;
  else cfg.command = aqc::Command::fig2_scan;

  return aqc::run_command(cfg, std::cout, std::cerr);
}
