#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aqc/minima.hpp"
#include "aqc/perturbation.hpp"
#include "aqc/sweep.hpp"

namespace aqc {

/// Shortest round-trip decimal with 17 significant digits; "nan"/"inf"
/// spelled out so the CSVs stay parseable.
std::string format_real(double x);

/// Header `lambda,E0,...,E{k-1},gap,S,M`, one row per grid point.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

void write_anticrossing_text(std::ostream& os, const AnticrossingReport& r);
void write_anticrossing_csv(std::ostream& os, const AnticrossingReport& r);

inline constexpr const char* kPredictionHeader =
    "E_gap_classical,chi_G,chi_L,lambda_star,f,HLG,HGL,gmin_pred,valid,reason";

std::string prediction_csv_row(const CrossingPrediction& p);
void write_prediction_text(std::ostream& os, const CrossingPrediction& p);

/// energy,size,distance_to_global,escape_cost; a trailing comment records
/// that clusters are grouped by energy alone.
void write_minima_csv(std::ostream& os, const std::vector<MinimaCluster>& clusters);

/// One w_L point of the exact-versus-perturbative comparison.
struct CompareRow {
  double w_L = 0.0;
  double lambda_star_exact = std::numeric_limits<double>::quiet_NaN();
  double g_min_exact = std::numeric_limits<double>::quiet_NaN();
  double lambda_star_pert = std::numeric_limits<double>::quiet_NaN();
  double g_min_pert = std::numeric_limits<double>::quiet_NaN();        // prefactor at perturbative lambda*
  double g_min_pert_at_exact = std::numeric_limits<double>::quiet_NaN();  // prefactor at exact lambda*
  int evaluations = 0;
  std::string status = "ok";
};

inline constexpr const char* kCompareHeader =
    "w_L,lambda_star_exact,g_min_exact,lambda_star_pert,g_min_pert,"
    "g_min_pert_at_exact,evals,status";

void write_compare_csv(std::ostream& os, const std::vector<CompareRow>& rows);

}  // namespace aqc
