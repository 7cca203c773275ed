#include <doctest.h>

#include <cmath>
#include <sstream>

#include "aqc/commands.hpp"
#include "aqc/errors.hpp"
#include "aqc/report.hpp"
#include "aqc/svg.hpp"

using namespace aqc;

TEST_CASE("real formatting round-trips") {
  for (double x : {0.1, -69.6, 1e-300, 2.0 / 3.0, 123456789.123456789}) {
    const auto s = format_real(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format_real(std::nan("")) == "nan");
  CHECK(format_real(-INFINITY) == "-inf");
}

TEST_CASE("sweep csv layout") {
  SweepResult r;
  r.k = 3;
  r.rows.push_back({0.5, {-1.0, 0.0, 1.0}, 1.0, 0.25, -0.5});
  std::ostringstream os;
  write_sweep_csv(os, r);
  CHECK(os.str() == "lambda,E0,E1,E2,gap,S,M\n0.5,-1,0,1,1,0.25,-0.5\n");
}

TEST_CASE("prediction row layout") {
  CrossingPrediction p;
  p.E_gap = 2.4;
  p.chi_G = 1.0;
  p.chi_L = 2.0;
  p.reason = CrossingStatus::no_real_solution;
  CHECK(prediction_csv_row(p) == "2.3999999999999999,1,2,nan,0,nan,nan,nan,false,no_real_solution");
  std::ostringstream os;
  write_prediction_text(os, p);
  CHECK(os.str().find("reason=no_real_solution\n") != std::string::npos);
}

TEST_CASE("anticrossing outputs") {
  AnticrossingReport r{0.25, 1e-3, {0.2, 0.3}, 17};
  std::ostringstream csv, kv;
  write_anticrossing_csv(csv, r);
  write_anticrossing_text(kv, r);
  CHECK(csv.str() == "lambda_star,g_min,evals\n0.25,0.001,17\n");
  CHECK(kv.str().find("evals=17") != std::string::npos);
}

TEST_CASE("svg output is self-contained and stable") {
  Series s{"gap", {0.0, 0.5, 1.0}, {1.0, 1e-6, 0.5}};
  const ChartSpec spec{"Gap", "λ", "gap", true};
  const auto a = render_line_chart(spec, {s});
  CHECK(a == render_line_chart(spec, {s}));
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("href") == std::string::npos);
  CHECK(a.find(">λ<") != std::string::npos);
  CHECK(a.find("1e-6") != std::string::npos);
  Series broken{"x", {0.0, 1.0, 2.0}, {1.0, std::nan(""), 2.0}};
  const auto b = render_line_chart({"t", "x", "y"}, {broken});
  std::size_t lines = 0;
  for (auto pos = b.find("<polyline"); pos != std::string::npos; pos = b.find("<polyline", pos + 1)) ++lines;
  CHECK(lines == 2);
  CHECK_THROWS_AS(render_line_chart(spec, {Series{"bad", {0.0}, {}}}), InputError);
}

TEST_CASE("range expansion") {
  const auto r = expand_range({1.5, 1.98, 0.02});
  CHECK(r.size() == 25);
  CHECK(r.back() == 1.98);
  CHECK(expand_range({1.8, 1.8, 0.01}).size() == 1);
  CHECK_THROWS_AS(expand_range({1.0, 0.5, 0.1}), InputError);
  CHECK_THROWS_AS(expand_range({1.0, 1.5, 0.0}), InputError);
}

TEST_CASE("predict on a landscape without local minima") {
  const IsingProblem p(2, {1.0, 1.0}, {}, 1.0);
  CHECK(predict_local_clusters(p, 3).empty());
}
