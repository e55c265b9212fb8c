#include "memest/estimators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace memest {

namespace {

double mean_of(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw std::domain_error(std::string("empty sample: no ") + what);
  double sum = std::accumulate(v.begin(), v.end(), 0.0);
  return sum / static_cast<double>(v.size());
}

bool is_integral(double v) { return std::nearbyint(v) == v && std::isfinite(v); }

}  // namespace

double Sample::y_bar() const { return mean_of(y_obs, "y values"); }
double Sample::x_bar() const { return mean_of(x_obs, "x values"); }

double est_mean(const Sample& s) { return s.y_bar(); }

double est_t1(const Sample& s, double mu_x) {
  const double xb = s.x_bar();
  if (xb == 0.0) throw std::domain_error("est_t1: sample mean of x is zero");
  return s.y_bar() * mu_x / xb;
}

double est_t2(const Sample& s, double mu_x) {
  const double xb = s.x_bar();
  if (mu_x + xb == 0.0) throw std::domain_error("est_t2: mu_x + xbar is zero");
  return s.y_bar() * std::exp((mu_x - xb) / (mu_x + xb));
}

double est_t3(const Sample& s, double mu_x, double w1, double w2) {
  return w1 * s.y_bar() + w2 * (mu_x - s.x_bar());
}

double est_t4(const Sample& s, double mu_x) {
  const double xb = s.x_bar();
  if (mu_x + xb == 0.0) throw std::domain_error("est_t4: xbar + mu_x is zero");
  return s.y_bar() * std::exp((xb - mu_x) / (xb + mu_x));
}

double est_t5(const Sample& s, double mu_x, double alpha) {
  const double xb = s.x_bar();
  if (xb == 0.0) throw std::domain_error("est_t5: sample mean of x is zero");
  if (mu_x == 0.0) throw std::domain_error("est_t5: mu_x is zero");
  return s.y_bar() * (alpha * mu_x / xb + (1.0 - alpha) * xb / mu_x);
}

double est_tp(const Sample& s, double mu_x, double q, double m1) {
  const double xb = s.x_bar();
  const double m2 = 1.0 - m1;
  if (xb + mu_x == 0.0) throw std::domain_error("est_tp: xbar + mu_x is zero");
  if (!is_integral(m1) && (xb <= 0.0 || mu_x <= 0.0))
    throw std::domain_error("est_tp: non-integer m1 requires positive xbar and mu_x");
  if (xb == 0.0 && m1 != 0.0) throw std::domain_error("est_tp: sample mean of x is zero");
  if (mu_x == 0.0 && m1 != 0.0) throw std::domain_error("est_tp: mu_x is zero");
  const double yb = s.y_bar();
  const double ratio_part = yb * std::pow(mu_x / xb, m1) * std::exp(m2 * (mu_x - xb) / (mu_x + xb));
  const double product_part = yb * std::pow(xb / mu_x, m1) * std::exp(m2 * (xb - mu_x) / (xb + mu_x));
  return q * ratio_part + (1.0 - q) * product_part;
}

double EstimatorSpec::evaluate(const Sample& s, double mu_x) const {
  switch (kind) {
    case EstimatorKind::Mean: return est_mean(s);
    case EstimatorKind::T1: return est_t1(s, mu_x);
    case EstimatorKind::T2: return est_t2(s, mu_x);
    case EstimatorKind::T3: return est_t3(s, mu_x, w1, w2);
    case EstimatorKind::T4: return est_t4(s, mu_x);
    case EstimatorKind::T5: return est_t5(s, mu_x, alpha);
    case EstimatorKind::Tp: return est_tp(s, mu_x, q, m1);
  }
  throw std::logic_error("unknown estimator kind");
}

std::string EstimatorSpec::name() const {
  switch (kind) {
    case EstimatorKind::Mean: return "mean";
    case EstimatorKind::T1: return "t1";
    case EstimatorKind::T2: return "t2";
    case EstimatorKind::T3: return "t3";
    case EstimatorKind::T4: return "t4";
    case EstimatorKind::T5: return "t5";
    case EstimatorKind::Tp: return "tp";
  }
  return "?";
}

EstimatorKind parse_estimator_kind(const std::string& text) {
  std::string t;
  for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "mean" || t == "ybar") return EstimatorKind::Mean;
  if (t == "t1") return EstimatorKind::T1;
  if (t == "t2") return EstimatorKind::T2;
  if (t == "t3") return EstimatorKind::T3;
  if (t == "t4") return EstimatorKind::T4;
  if (t == "t5") return EstimatorKind::T5;
  if (t == "tp") return EstimatorKind::Tp;
  throw std::invalid_argument("unknown estimator '" + text + "' (expected mean, t1..t5, tp)");
}

}  // namespace memest
