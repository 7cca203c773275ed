#include "aqc/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace aqc {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "lambda";
  for (int i = 0; i < sweep.k; ++i) os << ",E" << i;
  os << ",gap,S,M\n";
  for (const auto& row : sweep.rows) {
    os << format_real(row.lambda);
    for (double e : row.energies) os << ',' << format_real(e);
    os << ',' << format_real(row.gap) << ',' << format_real(row.S) << ','
       << format_real(row.M) << '\n';
  }
}

void write_anticrossing_text(std::ostream& os, const AnticrossingReport& r) {
  os << "lambda_star=" << format_real(r.lambda_star_exact) << '\n'
     << "g_min=" << format_real(r.g_min) << '\n'
     << "bracket_lo=" << format_real(r.bracket.first) << '\n'
     << "bracket_hi=" << format_real(r.bracket.second) << '\n'
     << "evals=" << r.evaluations << '\n';
}

void write_anticrossing_csv(std::ostream& os, const AnticrossingReport& r) {
  os << "lambda_star,g_min,evals\n"
     << format_real(r.lambda_star_exact) << ',' << format_real(r.g_min) << ','
     << r.evaluations << '\n';
}

std::string prediction_csv_row(const CrossingPrediction& p) {
  std::string s;
  s += format_real(p.E_gap) + ',' + format_real(p.chi_G) + ',' + format_real(p.chi_L) + ',';
  s += format_real(p.lambda_star.value_or(std::numeric_limits<double>::quiet_NaN())) + ',';
  s += std::to_string(p.f) + ',' + format_real(p.coupling_LG) + ',' +
       format_real(p.coupling_GL) + ',' + format_real(p.g_min_predicted) + ',';
  s += p.valid ? "true" : "false";
  s += ',';
  s += to_string(p.reason);
  return s;
}

void write_prediction_text(std::ostream& os, const CrossingPrediction& p) {
  os << "E_gap_classical=" << format_real(p.E_gap) << '\n'
     << "chi_G=" << format_real(p.chi_G) << '\n'
     << "chi_L=" << format_real(p.chi_L) << '\n'
     << "lambda_star="
     << format_real(p.lambda_star.value_or(std::numeric_limits<double>::quiet_NaN())) << '\n'
     << "prefactor_lambda=" << format_real(p.prefactor_lambda) << '\n'
     << "f=" << p.f << '\n'
     << "HLG=" << format_real(p.coupling_LG) << '\n'
     << "HGL=" << format_real(p.coupling_GL) << '\n'
     << "gmin_pred=" << format_real(p.g_min_predicted) << '\n'
     << "valid=" << (p.valid ? "true" : "false") << '\n'
     << "reason=" << to_string(p.reason) << '\n';
}

void write_minima_csv(std::ostream& os, const std::vector<MinimaCluster>& clusters) {
  os << "energy,size,distance_to_global,escape_cost\n";
  for (const auto& c : clusters)
    os << format_real(c.energy) << ',' << c.size() << ',' << c.distance_to_global
       << ',' << format_real(c.escape_cost) << '\n';
  os << "# clusters grouped by energy; symmetry between members not verified\n";
}

void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows) {
  os << kCompareHeader << '\n';
  for (const auto& r : rows)
    os << format_real(r.w_L) << ',' << format_real(r.lambda_star_exact) << ','
       << format_real(r.g_min_exact) << ',' << format_real(r.lambda_star_pert) << ','
       << format_real(r.g_min_pert) << ',' << format_real(r.g_min_pert_at_exact) << ','
       << r.evaluations << ',' << r.status << '\n';
}

}  // namespace aqc
