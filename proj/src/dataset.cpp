#include "memest/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace memest {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    std::size_t b = 0;
    while (b < cell.size() && cell[b] == ' ') ++b;
    cells.push_back(cell.substr(b));
  }
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row, const std::string& column) {
  double v = 0.0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
    throw std::invalid_argument("row " + std::to_string(row) + ", column '" + column +
                                "': non-numeric cell '" + cell + "'");
  return v;
}

// Population divisor N, mean subtracted (two-pass).
double pop_variance(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / n;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / n;
}

double pop_mean(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

double pop_covariance(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  const double ma = pop_mean(a), mb = pop_mean(b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
  return s / n;
}

}  // namespace

Dataset ingest(const std::string& path, const ColumnMapping& columns) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open dataset: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty file");
  const auto header = split_csv_line(line);
  auto find_col = [&](const std::string& name) -> long {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<long>(i);
    return -1;
  };
  const long cy = find_col(columns.y_obs);
  const long cx = find_col(columns.x_obs);
  if (cy < 0) throw std::invalid_argument(path + ": missing column '" + columns.y_obs + "'");
  if (cx < 0) throw std::invalid_argument(path + ": missing column '" + columns.x_obs + "'");
  const long cyt = find_col(columns.y_true);
  const long cxt = find_col(columns.x_true);
  if ((cyt < 0) != (cxt < 0))
    throw std::invalid_argument(path + ": true-value columns must be present for both variables");

  Dataset d;
  d.source = path;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != header.size())
      throw std::invalid_argument(path + ": row " + std::to_string(row) + " has " +
                                  std::to_string(cells.size()) + " cells, header has " +
                                  std::to_string(header.size()));
    d.y_obs.push_back(parse_cell(cells[cy], row, columns.y_obs));
    d.x_obs.push_back(parse_cell(cells[cx], row, columns.x_obs));
    if (cyt >= 0) {
      d.y_true.push_back(parse_cell(cells[cyt], row, columns.y_true));
      d.x_true.push_back(parse_cell(cells[cxt], row, columns.x_true));
    }
  }
  if (d.size() < 2)
    throw std::invalid_argument(path + ": need at least 2 data rows, got " +
                                std::to_string(d.size()));
  return d;
}

PopulationParams params_from_dataset(const Dataset& d, long n) {
  if (!d.has_true_values())
    throw std::invalid_argument(
        "dataset has no true-value columns; sigma2_u and sigma2_v cannot be estimated -- "
        "supply them directly in a params file");
  if (d.size() < 2) throw std::invalid_argument("dataset needs at least 2 rows");

  PopulationParams p;
  p.mu_y = pop_mean(d.y_true);
  p.mu_x = pop_mean(d.x_true);
  p.sigma2_y = pop_variance(d.y_true);
  p.sigma2_x = pop_variance(d.x_true);
  const double cov = pop_covariance(d.x_true, d.y_true);
  const double denom = std::sqrt(p.sigma2_y * p.sigma2_x);
  p.rho = denom > 0.0 ? cov / denom : 0.0;

  std::vector<double> u(d.size()), v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    u[i] = d.y_obs[i] - d.y_true[i];
    v[i] = d.x_obs[i] - d.x_true[i];
  }
  p.sigma2_u = pop_variance(u);
  p.sigma2_v = pop_variance(v);
  p.n = n;
  p.population_size = static_cast<long>(d.size());
  return p;
}

}  // namespace memest
