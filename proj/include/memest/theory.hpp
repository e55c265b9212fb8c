#pragma once

#include <optional>

#include "memest/moments.hpp"

namespace memest {

/// First-order MSE split into the no-measurement-error part (sampling)
/// and the measurement-error contribution. total is always computed as
/// sampling + measurement, so the decomposition identity holds exactly.
/// pre is the percent relative efficiency against MSE(ybar) = V_ym.
struct MseBreakdown {
  double sampling;
  double measurement;
  double total;
  double pre;
};

/// 100 * reference_mse / mse. Throws std::domain_error when mse <= 0.
double pre_of(double reference_mse, double mse);

/// MSE(ybar): sampling sigma2_y/n, measurement sigma2_u/n.
MseBreakdown mse_mean(const DerivedMoments& m, const PopulationParams& p);

/// Ratio estimator t1. Bias (R_m V_xm - V_yxm)/mu_x.
double bias_t1(const DerivedMoments& m, double mu_x);
MseBreakdown mse_t1(const DerivedMoments& m, const PopulationParams& p);

/// Exponential ratio t2. Bias ((3/8) R_m V_xm - (1/2) V_yxm)/mu_x.
double bias_t2(const DerivedMoments& m, double mu_x);
MseBreakdown mse_t2(const DerivedMoments& m, const PopulationParams& p);

/// Regression-type t3 at fixed constants.
MseBreakdown mse_t3(const DerivedMoments& m, const PopulationParams& p, double w1, double w2);

struct T3Optimum {
  double w1_star;
  double w2_star;
  double min_mse;
};

/// Closed-form optimum of t3: with b1 = mu_y^2 + V_ym, b2 = -V_yxm,
/// b3 = V_xm, b4 = mu_y^2, the optimum is w1* = b3 b4 / (b1 b3 - b2^2),
/// w2* = -b2 b4 / (b1 b3 - b2^2), min = mu_y^2 - b3 b4^2 / (b1 b3 - b2^2).
/// Throws std::domain_error when b1 b3 - b2^2 <= 0 (degenerate moment
/// matrix) or when the resulting minimum is negative.
T3Optimum optimum_t3(const DerivedMoments& m, double mu_y);

/// Exponential product t4. The MSE here is the delta-method expansion
/// (sampling sigma2_y/n + R_m^2 sigma2_x/(4n) + R_m rho sigma_y sigma_x / n);
/// the source's printed bracket, which differs in the sign of the
/// quadratic term, is available in paper_printed below. The bias keeps
/// the printed form ((1/8) R_m V_xm + (1/2) V_yxm)/mu_x.
double bias_t4(const DerivedMoments& m, double mu_x);
MseBreakdown mse_t4(const DerivedMoments& m, const PopulationParams& p);

/// Ratio-product combination t5 at fixed alpha.
double bias_t5(const DerivedMoments& m, double mu_x, double alpha);
MseBreakdown mse_t5(const DerivedMoments& m, const PopulationParams& p, double alpha);

struct T5Optimum {
  double alpha_star;
  double min_mse;
};

/// alpha* = (R_m V_xm + V_yxm) / (2 R_m V_xm); min is MSE(t5) at alpha*.
/// Throws std::domain_error on a zero denominator or a negative minimum.
T5Optimum optimum_t5(const DerivedMoments& m);

/// Bias of the proposed family, evaluated verbatim from the source's
/// printed expression. The printed expression is garbled (one term is a
/// product of two R_m/mu_x factors), so the result carries a marker.
struct TpBias {
  double value;
  bool garbled_source;  ///< always true: low confidence, printed source is garbled
};
TpBias bias_tp(const DerivedMoments& m, const PopulationParams& p, double q, double m1);

/// First-order MSE of the proposed family. The authoritative result is
/// the delta-method expansion of the estimator: with g = (2q-1)(1+m1)/2,
///   total = V_ym + g^2 R_m^2 V_xm - 2 g R_m V_yxm.
/// The printed Eq.-style formula is evaluated verbatim alongside as a
/// diagnostic; diverges is set when the two differ by more than 1e-6
/// relative (they essentially always do; the printed formula retains a
/// bare mu_y^2 term).
struct TpMse {
  MseBreakdown delta;      ///< authoritative delta-method breakdown
  double printed_formula;  ///< the printed MSE expression, verbatim
  bool diverges;
};
TpMse mse_tp(const DerivedMoments& m, const PopulationParams& p, double q, double m1);

struct TpOptimum {
  double m1;
  double q_star;    ///< numeric argmin of the delta-method MSE
  double min_mse;   ///< delta-method MSE at q_star
  bool converged;   ///< golden-section convergence flag
  std::optional<double> q_closed_form;  ///< printed closed form; nullopt on zero denominator
};

/// Numeric argmin of the delta-method MSE over q (golden section on
/// [-2, 3]); the printed closed form is reported alongside when its
/// denominator is nonzero. The numeric result is authoritative.
TpOptimum optimum_tp(const DerivedMoments& m, double m1);

/// Verbatim transcriptions of the source's printed t4 MSE, kept for the
/// discrepancy report. The text line and the displayed equation disagree
/// on the sign of sigma2_u; both variants are exposed.
namespace paper_printed {

/// sampling = (sigma2_y/n) [1 + (C_x/C_y)(rho - C_x/(4 C_y))],
/// measurement = (1/n) [mu_y^2 sigma2_v / (4 mu_x^2) + sigma2_u].
MseBreakdown mse_t4_plus_sign(const DerivedMoments& m, const PopulationParams& p);

/// Same sampling part with measurement = (1/n) [mu_y^2 sigma2_v / (4 mu_x^2) - sigma2_u],
/// as displayed in the equation itself.
MseBreakdown mse_t4_minus_sign(const DerivedMoments& m, const PopulationParams& p);

}  // namespace paper_printed

}  // namespace memest
