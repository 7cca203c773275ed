#pragma once

#include <string>
#include <vector>

namespace aqc {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;  // plot log10(y); non-positive or non-finite values break the line
  int width = 720;
  int height = 480;
};

/// Self-contained SVG line chart: axes, ticks, one polyline per series and a
/// legend. Output depends only on the inputs.
std::string render_line_chart(const ChartSpec& spec, const std::vector<Series>& series);

}  // namespace aqc
