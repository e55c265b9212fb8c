#include "memest/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "memest/numsearch.hpp"

namespace memest {

namespace {

MseBreakdown breakdown(double sampling, double measurement, double v_ym) {
  MseBreakdown b;
  b.sampling = sampling;
  b.measurement = measurement;
  b.total = sampling + measurement;
  b.pre = b.total > 0.0 ? 100.0 * v_ym / b.total : std::numeric_limits<double>::quiet_NaN();
  return b;
}

}  // namespace

double pre_of(double reference_mse, double mse) {
  if (!(mse > 0.0)) throw std::domain_error("pre_of: mse must be positive");
  return 100.0 * reference_mse / mse;
}

MseBreakdown mse_mean(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  return breakdown(p.sigma2_y / n, p.sigma2_u / n, m.v_ym);
}

double bias_t1(const DerivedMoments& m, double mu_x) {
  return (m.r_m * m.v_xm - m.v_yxm) / mu_x;
}

MseBreakdown mse_t1(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  const double sampling = p.sigma2_y / n + m.r_m * m.r_m * p.sigma2_x / n -
                          2.0 * m.r_m * p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  const double measurement =
      ((p.mu_y * p.mu_y) / (p.mu_x * p.mu_x) * p.sigma2_v + p.sigma2_u) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

double bias_t2(const DerivedMoments& m, double mu_x) {
  return ((3.0 / 8.0) * m.r_m * m.v_xm - 0.5 * m.v_yxm) / mu_x;
}

MseBreakdown mse_t2(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  const double sampling =
      (p.sigma2_y / n) * (1.0 - (m.c_x / m.c_y) * (p.rho - m.c_x / (4.0 * m.c_y)));
  const double measurement =
      ((p.mu_y * p.mu_y) / (4.0 * p.mu_x * p.mu_x) * p.sigma2_v + p.sigma2_u) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

MseBreakdown mse_t3(const DerivedMoments& m, const PopulationParams& p, double w1, double w2) {
  const double n = static_cast<double>(p.n);
  const double sampling = p.mu_y * p.mu_y * (w1 - 1.0) * (w1 - 1.0) +
                          w1 * w1 * p.sigma2_y / n + w2 * w2 * p.sigma2_x / n -
                          2.0 * w1 * w2 * p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  const double measurement = (w1 * w1 * p.sigma2_u + w2 * w2 * p.sigma2_v) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

T3Optimum optimum_t3(const DerivedMoments& m, double mu_y) {
  const double b1 = mu_y * mu_y + m.v_ym;
  const double b2 = -m.v_yxm;
  const double b3 = m.v_xm;
  const double b4 = mu_y * mu_y;
  const double den = b1 * b3 - b2 * b2;
  if (!(den > 0.0)) throw std::domain_error("optimum_t3: degenerate moment matrix");
  T3Optimum opt;
  opt.w1_star = b3 * b4 / den;
  opt.w2_star = -b2 * b4 / den;
  opt.min_mse = mu_y * mu_y - b3 * b4 * b4 / den;
  if (opt.min_mse < 0.0)
    throw std::domain_error("optimum_t3: negative minimum MSE (inconsistent moments)");
  return opt;
}

double bias_t4(const DerivedMoments& m, double mu_x) {
  return ((1.0 / 8.0) * m.r_m * m.v_xm + 0.5 * m.v_yxm) / mu_x;
}

MseBreakdown mse_t4(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  const double sampling = p.sigma2_y / n + m.r_m * m.r_m * p.sigma2_x / (4.0 * n) +
                          m.r_m * p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  const double measurement =
      ((p.mu_y * p.mu_y) / (4.0 * p.mu_x * p.mu_x) * p.sigma2_v + p.sigma2_u) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

double bias_t5(const DerivedMoments& m, double mu_x, double alpha) {
  return (alpha * m.r_m * m.v_xm + m.v_yxm - 2.0 * alpha * m.v_yxm) / mu_x;
}

MseBreakdown mse_t5(const DerivedMoments& m, const PopulationParams& p, double alpha) {
  const double n = static_cast<double>(p.n);
  const double z = 2.0 * alpha - 1.0;  // the bracket 1 + 4a^2 - 4a is (2a-1)^2
  const double sampling = p.sigma2_y / n + z * z * m.r_m * m.r_m * p.sigma2_x / n -
                          2.0 * z * m.r_m * p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  const double measurement = (p.sigma2_u + z * z * m.r_m * m.r_m * p.sigma2_v) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

T5Optimum optimum_t5(const DerivedMoments& m) {
  const double den = 2.0 * m.r_m * m.v_xm;
  if (den == 0.0) throw std::domain_error("optimum_t5: zero denominator (R_m V_xm = 0)");
  T5Optimum opt;
  opt.alpha_star = (m.r_m * m.v_xm + m.v_yxm) / den;
  const double z = 2.0 * opt.alpha_star - 1.0;
  opt.min_mse = m.v_ym + z * z * m.r_m * m.r_m * m.v_xm - 2.0 * z * m.r_m * m.v_yxm;
  if (opt.min_mse < 0.0)
    throw std::domain_error("optimum_t5: negative minimum MSE (inconsistent moments)");
  return opt;
}

TpBias bias_tp(const DerivedMoments& m, const PopulationParams& p, double q, double m1) {
  const double mu_x = p.mu_x;
  const double rm = m.r_m;
  // Verbatim from the printed expression; the last term of the first
  // bracket really is a product of two R_m/mu_x factors as printed.
  const double bracket_x = m1 * (m1 + 1.0) * rm / (2.0 * mu_x) + m1 * rm / (2.0 * mu_x) +
                           (rm / (8.0 * mu_x)) * (1.0 - m1) * (rm / (4.0 * mu_x));
  const double bracket_xy = m1 * rm / (2.0 * mu_x) + 1.0 / (2.0 * mu_x) -
                            2.0 * m1 * q / mu_x - q * (1.0 - m1) * rm / (4.0 * mu_x);
  return {m.v_xm * bracket_x + m.v_yxm * bracket_xy, true};
}

TpMse mse_tp(const DerivedMoments& m, const PopulationParams& p, double q, double m1) {
  const double n = static_cast<double>(p.n);
  const double g = (2.0 * q - 1.0) * (1.0 + m1) / 2.0;
  const double sampling = p.sigma2_y / n + g * g * m.r_m * m.r_m * p.sigma2_x / n -
                          2.0 * g * m.r_m * p.rho * std::sqrt(p.sigma2_y * p.sigma2_x) / n;
  const double measurement = (p.sigma2_u + g * g * m.r_m * m.r_m * p.sigma2_v) / n;
  TpMse out;
  out.delta = breakdown(sampling, measurement, m.v_ym);
  const double rm = m.r_m;
  out.printed_formula = p.mu_y * p.mu_y + m.v_ym +
                        rm * rm * m.v_xm *
                            (m1 * m1 + q * q / 4.0 + 4.0 * q * q * m1 * m1 +
                             2.0 * q * q * m1 - 4.0 * q * m1 * m1) -
                        rm * q * m.v_xm * m1 - m.v_yxm * rm * (4.0 * q * m1 + q);
  const double scale = std::max(1.0, std::fabs(out.delta.total));
  out.diverges = std::fabs(out.delta.total - out.printed_formula) > 1e-6 * scale;
  return out;
}

TpOptimum optimum_tp(const DerivedMoments& m, double m1) {
  TpOptimum opt;
  opt.m1 = m1;
  const double g_coeff = (1.0 + m1) / 2.0;
  auto total = [&](double q) {
    const double g = (2.0 * q - 1.0) * g_coeff;
    return m.v_ym + g * g * m.r_m * m.r_m * m.v_xm - 2.0 * g * m.r_m * m.v_yxm;
  };
  SearchSpec spec{-2.0, 3.0, 1e-10, 200};
  const auto res = golden_minimize(total, spec);
  opt.q_star = res.argmin;
  opt.min_mse = res.min;
  opt.converged = res.converged;
  const double cf_den = m.v_xm * m.r_m * (8.0 * m1 * m1 + 0.5);
  if (cf_den != 0.0) {
    opt.q_closed_form = (4.0 * m.r_m * m1 * m1 * m.v_xm + 2.0 * m.v_xm * m1 +
                         m.v_yxm * (4.0 * m1 + 1.0)) /
                        cf_den;
  }
  return opt;
}

namespace paper_printed {

MseBreakdown mse_t4_plus_sign(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  const double sampling =
      (p.sigma2_y / n) * (1.0 + (m.c_x / m.c_y) * (p.rho - m.c_x / (4.0 * m.c_y)));
  const double measurement =
      ((p.mu_y * p.mu_y) / (4.0 * p.mu_x * p.mu_x) * p.sigma2_v + p.sigma2_u) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

MseBreakdown mse_t4_minus_sign(const DerivedMoments& m, const PopulationParams& p) {
  const double n = static_cast<double>(p.n);
  const double sampling =
      (p.sigma2_y / n) * (1.0 + (m.c_x / m.c_y) * (p.rho - m.c_x / (4.0 * m.c_y)));
  const double measurement =
      ((p.mu_y * p.mu_y) / (4.0 * p.mu_x * p.mu_x) * p.sigma2_v - p.sigma2_u) / n;
  return breakdown(sampling, measurement, m.v_ym);
}

}  // namespace paper_printed

}  // namespace memest
