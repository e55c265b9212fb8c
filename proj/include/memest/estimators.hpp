#pragma once

#include <string>
#include <vector>

namespace memest {

/// A realized sample of observed (y, x) pairs, optionally carrying the
/// true values (used by calibration studies and the simulation engine;
/// the estimators themselves only ever read the observed columns).
struct Sample {
  std::vector<double> y_obs;
  std::vector<double> x_obs;
  std::vector<double> y_true;  ///< empty, or same length as y_obs
  std::vector<double> x_true;

  std::size_t size() const { return y_obs.size(); }
  bool has_true_values() const { return !y_true.empty(); }

  double y_bar() const;
  double x_bar() const;
};

/// Point estimators of mu_y. Each throws std::domain_error when its
/// precondition on the realized sample fails (zero or negative x-bar
/// where the form requires otherwise).

/// Sample mean of observed y.
double est_mean(const Sample& s);

/// Ratio estimator ybar * mu_x / xbar.
double est_t1(const Sample& s, double mu_x);

/// Exponential ratio estimator ybar * exp((mu_x - xbar)/(mu_x + xbar)).
double est_t2(const Sample& s, double mu_x);

/// Regression-type estimator w1 * ybar + w2 * (mu_x - xbar).
double est_t3(const Sample& s, double mu_x, double w1, double w2);

/// Exponential product estimator ybar * exp((xbar - mu_x)/(xbar + mu_x)).
double est_t4(const Sample& s, double mu_x);

/// Ratio-product combination ybar * [alpha * mu_x/xbar + (1-alpha) * xbar/mu_x].
double est_t5(const Sample& s, double mu_x, double alpha);

/// Proposed family, with m2 = 1 - m1:
///   q * ybar (mu_x/xbar)^m1 exp(m2 (mu_x-xbar)/(mu_x+xbar))
///   + (1-q) * ybar (xbar/mu_x)^m1 exp(m2 (xbar-mu_x)/(xbar+mu_x))
/// Non-integer m1 requires xbar > 0 and mu_x > 0.
double est_tp(const Sample& s, double mu_x, double q, double m1);

enum class EstimatorKind { Mean, T1, T2, T3, T4, T5, Tp };

/// An estimator selection plus whatever constants it needs.
/// For Tp the second exponent is always 1 - m1.
struct EstimatorSpec {
  EstimatorKind kind = EstimatorKind::Mean;
  double w1 = 1.0, w2 = 0.0;  // T3
  double alpha = 1.0;         // T5
  double q = 1.0, m1 = 1.0;   // Tp

  double evaluate(const Sample& s, double mu_x) const;
  std::string name() const;
};

/// Parses "mean", "t1".."t5", "tp" (case-insensitive).
/// Throws std::invalid_argument on anything else.
EstimatorKind parse_estimator_kind(const std::string& text);

}  // namespace memest
