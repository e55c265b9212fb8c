#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memest/moments.hpp"
#include "memest/theory.hpp"

namespace memest {

struct ReportRow {
  std::string name;
  double mse_without_me;
  double me_contribution;
  double mse_with_me;
  double pre;
};

/// Fixed row order: ybar, t1, t2, t3opt, t4, t5opt, tpopt. t3 is
/// evaluated at (w1*, w2*), t5 at alpha*, tp at (m1, numeric q*).
struct ReportTable {
  std::vector<ReportRow> rows;
  PopulationParams params;
  double m1;
  std::string generated_at;  ///< metadata only; numeric cells are a pure function of params
  std::string tool_version;
};

ReportTable make_report(const PopulationParams& p, double m1 = 1.0);

/// Human-readable table, 3 decimals.
std::string format_report_text(const ReportTable& t);

/// Machine output: '#' metadata lines, then a header row and one CSV row
/// per estimator with full-precision numerals.
std::string format_report_csv(const ReportTable& t);

/// Parses the CSV emission back (metadata lines are kept only as text).
ReportTable parse_report_csv(const std::string& csv);

/// One cell of the claims-under-test comparison.
struct CellCheck {
  double claimed;
  double formula;
  bool match;  ///< relative agreement within 0.5%
};

struct DiscrepancyRow {
  std::string name;
  CellCheck sampling;
  CellCheck measurement;
  CellCheck total;
  CellCheck pre;
  double mc_total;
  double mc_total_se;
  double mc_sampling;     ///< Monte Carlo total with measurement errors switched off
  double mc_measurement;  ///< mc_total - mc_sampling (common random numbers)
  double mc_pre;
};

struct DiscrepancyReport {
  std::vector<DiscrepancyRow> rows;
  std::vector<std::string> notes;
  std::int64_t replications;
  std::uint64_t seed;
};

/// Recomputes every cell of the claimed reference MSE table from the
/// formulas and from Monte Carlo, and attaches MATCH/MISMATCH verdicts.
/// The t4 formula column uses the transcribed source expression (its
/// delta-method replacement is given in the notes).
DiscrepancyReport compute_discrepancy(const PopulationParams& p, std::int64_t replications,
                                      std::uint64_t seed, int threads = 1);

std::string format_discrepancy_text(const DiscrepancyReport& r);

/// compute + render.
std::string discrepancy_report(const PopulationParams& p, std::int64_t replications,
                               std::uint64_t seed, int threads = 1);

}  // namespace memest
