#include "memest/simulate.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace memest {

void SimulationConfig::validate() const {
  params.validate();
  if (replications < 100)
    throw std::invalid_argument("simulation needs at least 100 replications");
}

Sample draw_population_sample(const PopulationParams& p, SubstreamRng& rng) {
  const std::size_t n = static_cast<std::size_t>(p.n);
  Sample s;
  s.y_obs.resize(n);
  s.x_obs.resize(n);
  s.y_true.resize(n);
  s.x_true.resize(n);
  const double sy = std::sqrt(p.sigma2_y);
  const double sx = std::sqrt(p.sigma2_x);
  const double su = std::sqrt(p.sigma2_u);
  const double sv = std::sqrt(p.sigma2_v);
  const double cross = std::sqrt(std::max(0.0, 1.0 - p.rho * p.rho));
  for (std::size_t i = 0; i < n; ++i) {
    double z1, z2, z3, z4;
    rng.normal_pair(z1, z2);
    rng.normal_pair(z3, z4);
    const double yt = p.mu_y + sy * z1;
    const double xt = p.mu_x + sx * (p.rho * z1 + cross * z2);
    s.y_true[i] = yt;
    s.x_true[i] = xt;
    s.y_obs[i] = yt + su * z3;
    s.x_obs[i] = xt + sv * z4;
  }
  return s;
}

namespace {

struct RepOutcome {
  double error = 0.0;  // estimate - mu_y
  bool ok = false;
};

void run_block(const SimulationConfig& cfg, std::int64_t begin, std::int64_t end,
               RepOutcome* out) {
  for (std::int64_t rep = begin; rep < end; ++rep) {
    SubstreamRng rng(cfg.seed, static_cast<std::uint64_t>(rep));
    Sample s = draw_population_sample(cfg.params, rng);
    try {
      const double est = cfg.estimator.evaluate(s, cfg.params.mu_x);
      out[rep].error = est - cfg.params.mu_y;
      out[rep].ok = std::isfinite(out[rep].error);
    } catch (const std::domain_error&) {
      out[rep].ok = false;
    }
  }
}

}  // namespace

SimulationResult run_simulation(const SimulationConfig& cfg, int threads) {
  cfg.validate();
  const std::int64_t reps = cfg.replications;
  std::vector<RepOutcome> outcomes(static_cast<std::size_t>(reps));
  if (threads < 1) threads = 1;
  if (threads == 1) {
    run_block(cfg, 0, reps, outcomes.data());
  } else {
    std::vector<std::thread> pool;
    const std::int64_t chunk = (reps + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::int64_t b = t * chunk;
      const std::int64_t e = std::min(reps, b + chunk);
      if (b >= e) break;
      pool.emplace_back(run_block, std::cref(cfg), b, e, outcomes.data());
    }
    for (auto& th : pool) th.join();
  }

  // Sequential fold in replication order: the result is a pure function
  // of (cfg), independent of the thread count above.
  std::int64_t ok_count = 0;
  double sum_err = 0.0, sum_sq = 0.0;
  for (const auto& o : outcomes) {
    if (!o.ok) continue;
    ++ok_count;
    sum_err += o.error;
    sum_sq += o.error * o.error;
  }
  if (ok_count == 0) throw std::runtime_error("simulation: every replication failed");

  SimulationResult r;
  r.replications = reps;
  r.seed = cfg.seed;
  r.failed_draws = reps - ok_count;
  r.reliable = static_cast<double>(r.failed_draws) / static_cast<double>(reps) < 0.01;
  const double nok = static_cast<double>(ok_count);
  r.empirical_bias = sum_err / nok;
  r.empirical_mse = sum_sq / nok;
  double ss = 0.0;
  for (const auto& o : outcomes) {
    if (!o.ok) continue;
    const double d = o.error * o.error - r.empirical_mse;
    ss += d * d;
  }
  const double var_sq = ok_count > 1 ? ss / (nok - 1.0) : 0.0;
  r.mse_standard_error = std::sqrt(var_sq / nok);
  return r;
}

std::vector<std::pair<double, SimulationResult>> empirical_mse_curve(
    const SimulationConfig& cfg, std::span<const double> constant_grid, int threads) {
  if (constant_grid.empty()) throw std::invalid_argument("empty constant grid");
  const auto kind = cfg.estimator.kind;
  if (kind != EstimatorKind::T3 && kind != EstimatorKind::T5 && kind != EstimatorKind::Tp)
    throw std::invalid_argument("mse curve: estimator has no free constant (need t3, t5 or tp)");
  std::vector<std::pair<double, SimulationResult>> out;
  out.reserve(constant_grid.size());
  for (double c : constant_grid) {
    SimulationConfig point = cfg;  // same seed everywhere: common random numbers
    switch (kind) {
      case EstimatorKind::T3: point.estimator.w2 = c; break;
      case EstimatorKind::T5: point.estimator.alpha = c; break;
      default: point.estimator.q = c; break;
    }
    out.emplace_back(c, run_simulation(point, threads));
  }
  return out;
}

std::string simulation_csv_header() {
  return "estimator,n,replications,seed,empirical_bias,empirical_mse,se,failed_draws";
}

std::string simulation_csv_row(const SimulationConfig& cfg, const SimulationResult& r) {
  std::ostringstream out;
  out << cfg.estimator.name() << ',' << cfg.params.n << ',' << r.replications << ',' << r.seed
      << ',' << format_double(r.empirical_bias) << ',' << format_double(r.empirical_mse) << ','
      << format_double(r.mse_standard_error) << ',' << r.failed_draws;
  return out.str();
}

}  // namespace memest
