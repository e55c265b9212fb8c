#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "memest/estimators.hpp"
#include "memest/moments.hpp"
#include "memest/rng.hpp"

namespace memest {

enum class ErrorDistribution { Normal };
enum class Superpopulation { BivariateNormal };

struct SimulationConfig {
  PopulationParams params;
  EstimatorSpec estimator;
  std::int64_t replications = 200000;
  std::uint64_t seed = 1;
  ErrorDistribution error_distribution = ErrorDistribution::Normal;
  Superpopulation superpopulation = Superpopulation::BivariateNormal;

  void validate() const;  ///< params valid and replications >= 100
};

struct SimulationResult {
  double empirical_bias = 0.0;
  double empirical_mse = 0.0;
  double mse_standard_error = 0.0;
  std::int64_t replications = 0;
  std::uint64_t seed = 0;
  std::int64_t failed_draws = 0;  ///< replications rejected by estimator domain errors
  bool reliable = true;           ///< false when failed_draws/replications >= 1%
};

/// Draws n units from the bivariate-normal superpopulation and adds
/// independent normal measurement errors. The sample carries both the
/// observed and the true values. Deterministic given the stream.
Sample draw_population_sample(const PopulationParams& p, SubstreamRng& rng);

/// Runs the Monte Carlo study. Replications are independent; each uses
/// the substream (seed, replication index), and results are folded in
/// replication order, so the outcome is identical for any thread count.
/// Throws std::runtime_error if every draw fails.
SimulationResult run_simulation(const SimulationConfig& cfg, int threads = 1);

/// One simulation per grid value of the estimator's free constant
/// (alpha for T5, q for Tp, w2 for T3), all with the same seed (common
/// random numbers). Throws std::invalid_argument for estimators without
/// a free constant.
std::vector<std::pair<double, SimulationResult>> empirical_mse_curve(
    const SimulationConfig& cfg, std::span<const double> constant_grid, int threads = 1);

/// Flat record emission: estimator,n,replications,seed,empirical_bias,
/// empirical_mse,se,failed_draws. Full-precision numerals.
std::string simulation_csv_header();
std::string simulation_csv_row(const SimulationConfig& cfg, const SimulationResult& r);

}  // namespace memest
