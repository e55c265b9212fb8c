#pragma once

#include <string>
#include <vector>

#include "memest/moments.hpp"

namespace memest {

/// Header names for the observed and (optional) true-value columns.
struct ColumnMapping {
  std::string y_obs = "y_obs";
  std::string x_obs = "x_obs";
  std::string y_true = "y_true";
  std::string x_true = "x_true";
};

struct Dataset {
  std::vector<double> y_obs;
  std::vector<double> x_obs;
  std::vector<double> y_true;  ///< empty when the file has no true-value columns
  std::vector<double> x_true;
  std::string source;

  std::size_t size() const { return y_obs.size(); }
  bool has_true_values() const { return !y_true.empty(); }
};

/// Reads a CSV file with a header row. The observed columns are
/// required; the true-value columns must be present for all rows or
/// absent entirely. Throws std::invalid_argument with row/column
/// diagnostics on missing file, fewer than 2 data rows, ragged rows or
/// non-numeric cells.
Dataset ingest(const std::string& path, const ColumnMapping& columns = {});

/// Computes Table-4.1-style parameters from the true-value columns.
/// Convention (pinned against the bundled dataset): every moment uses
/// the population divisor N -- the true-value variances, the correlation
/// and the error-residual variances var(y_obs - y_true), var(x_obs - x_true),
/// each about its own mean. Throws when the dataset lacks true values
/// (supply sigma2_u, sigma2_v directly in a params file instead).
PopulationParams params_from_dataset(const Dataset& d, long n);

}  // namespace memest
