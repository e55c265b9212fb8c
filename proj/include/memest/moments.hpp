#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace memest {

/// True population moments of the study/auxiliary pair plus the
/// measurement-error variances and sample size. One row of a parameter
/// table; everything downstream is a function of these values.
struct PopulationParams {
  double mu_y = 0.0;      ///< mean of the study variable y
  double mu_x = 0.0;      ///< mean of the auxiliary variable x (must be nonzero)
  double sigma2_y = 0.0;  ///< variance of y
  double sigma2_x = 0.0;  ///< variance of x
  double rho = 0.0;       ///< correlation of the true values of x and y
  double sigma2_u = 0.0;  ///< measurement-error variance on observed y
  double sigma2_v = 0.0;  ///< measurement-error variance on observed x
  long n = 0;             ///< sample size
  std::optional<long> population_size;  ///< N; nullopt means infinite. Metadata only.

  /// Throws std::invalid_argument if any invariant is violated
  /// (|rho| <= 1, nonnegative variances, mu_x != 0, n >= 2).
  void validate() const;

  /// Copy with sigma2_u = sigma2_v = 0.
  PopulationParams without_measurement_error() const;
};

/// Moment quantities consumed by every first-order bias/MSE formula.
/// V_ym and V_xm are the variances of the observed means (true variance
/// plus error variance, over n); V_yxm is the covariance of the means,
/// which measurement error does not touch.
struct DerivedMoments {
  double r_m;    ///< R_m = mu_y / mu_x
  double c_x;    ///< sigma_x / mu_x
  double c_y;    ///< sigma_y / mu_y
  double v_ym;   ///< (sigma2_y + sigma2_u) / n
  double v_xm;   ///< (sigma2_x + sigma2_v) / n
  double v_yxm;  ///< rho * sigma_y * sigma_x / n
};

/// Throws std::invalid_argument on invalid params or mu_y == 0
/// (c_y would be undefined).
DerivedMoments derive_moments(const PopulationParams& p);

/// Flat key=value parameter file. Keys: mu_y, mu_x, sigma2_y, sigma2_x,
/// rho, sigma2_u, sigma2_v, n, N. N may be "infinite". Lines starting
/// with '#' and blank lines are ignored on read; writing is canonical
/// (fixed key order, shortest round-trip numerals), so
/// write(read(write(p))) is byte-identical to write(p).
PopulationParams read_params(std::istream& in);
PopulationParams read_params_file(const std::string& path);
std::string write_params(const PopulationParams& p);
void write_params_file(const PopulationParams& p, const std::string& path);

/// Shortest decimal string that round-trips to exactly this double.
std::string format_double(double v);

}  // namespace memest
