// Command-line front end: parameter ingestion, report generation,
// discrepancy analysis, Monte Carlo runs and optimum-constant search.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "memest/dataset.hpp"
#include "memest/moments.hpp"
#include "memest/numsearch.hpp"
#include "memest/report.hpp"
#include "memest/simulate.hpp"
#include "memest/theory.hpp"

namespace {

using namespace memest;

int cmd_moments(const std::string& params_path, const std::string& format) {
  const PopulationParams p = read_params_file(params_path);
  const DerivedMoments m = derive_moments(p);
  if (format == "csv") {
    std::cout << "r_m,c_x,c_y,v_ym,v_xm,v_yxm\n";
    std::cout << format_double(m.r_m) << ',' << format_double(m.c_x) << ','
              << format_double(m.c_y) << ',' << format_double(m.v_ym) << ','
              << format_double(m.v_xm) << ',' << format_double(m.v_yxm) << "\n";
  } else {
    std::printf("r_m    = %s\n", format_double(m.r_m).c_str());
    std::printf("c_x    = %s\n", format_double(m.c_x).c_str());
    std::printf("c_y    = %s\n", format_double(m.c_y).c_str());
    std::printf("v_ym   = %s\n", format_double(m.v_ym).c_str());
    std::printf("v_xm   = %s\n", format_double(m.v_xm).c_str());
    std::printf("v_yxm  = %s\n", format_double(m.v_yxm).c_str());
  }
  return 0;
}

int cmd_report(const std::string& params_path, double m1, const std::string& format) {
  const PopulationParams p = read_params_file(params_path);
  const ReportTable t = make_report(p, m1);
  std::cout << (format == "csv" ? format_report_csv(t) : format_report_text(t));
  return 0;
}

int cmd_discrepancy(const std::string& params_path, std::int64_t reps, std::uint64_t seed,
                    int threads) {
  const PopulationParams p = read_params_file(params_path);
  std::cout << discrepancy_report(p, reps, seed, threads);
  return 0;
}

int cmd_simulate(const std::string& params_path, const std::string& estimator, std::int64_t reps,
                 std::uint64_t seed, int threads, double alpha, double q, double m1, double w1,
                 double w2, bool csv) {
  SimulationConfig cfg;
  cfg.params = read_params_file(params_path);
  cfg.estimator.kind = parse_estimator_kind(estimator);
  cfg.estimator.alpha = alpha;
  cfg.estimator.q = q;
  cfg.estimator.m1 = m1;
  cfg.estimator.w1 = w1;
  cfg.estimator.w2 = w2;
  cfg.replications = reps;
  cfg.seed = seed;
  const SimulationResult r = run_simulation(cfg, threads);
  if (csv) {
    std::cout << simulation_csv_header() << "\n" << simulation_csv_row(cfg, r) << "\n";
  } else {
    std::printf("estimator      %s\n", cfg.estimator.name().c_str());
    std::printf("replications   %lld\n", static_cast<long long>(r.replications));
    std::printf("seed           %llu\n", static_cast<unsigned long long>(r.seed));
    std::printf("empirical_bias %s\n", format_double(r.empirical_bias).c_str());
    std::printf("empirical_mse  %s\n", format_double(r.empirical_mse).c_str());
    std::printf("mse_se         %s\n", format_double(r.mse_standard_error).c_str());
    std::printf("failed_draws   %lld%s\n", static_cast<long long>(r.failed_draws),
                r.reliable ? "" : "  (UNRELIABLE: >1% of draws failed)");
  }
  if (!r.reliable) return 1;
  return 0;
}

int cmd_optimum(const std::string& params_path, const std::string& estimator, double m1) {
  const PopulationParams p = read_params_file(params_path);
  const DerivedMoments m = derive_moments(p);
  const bool all = estimator.empty();
  if (all || estimator == "t3") {
    const T3Optimum o = optimum_t3(m, p.mu_y);
    auto f = [&](double w1, double w2) { return mse_t3(m, p, w1, w2).total; };
    const auto g = grid_refine_minimize_2d(f, Box2{-1.0, 2.0, -2.0, 2.0}, 17, 8);
    std::printf("t3  closed form: w1*=%s w2*=%s min=%s\n", format_double(o.w1_star).c_str(),
                format_double(o.w2_star).c_str(), format_double(o.min_mse).c_str());
    std::printf("t3  grid search: w1*=%s w2*=%s min=%s\n", format_double(g.x).c_str(),
                format_double(g.y).c_str(), format_double(g.min).c_str());
  }
  if (all || estimator == "t5") {
    const T5Optimum o = optimum_t5(m);
    auto f = [&](double a) { return mse_t5(m, p, a).total; };
    const auto g = golden_minimize(f, SearchSpec{-1.0, 2.0, 1e-10, 200});
    std::printf("t5  closed form: alpha*=%s min=%s\n", format_double(o.alpha_star).c_str(),
                format_double(o.min_mse).c_str());
    std::printf("t5  golden:      alpha*=%s min=%s%s\n", format_double(g.argmin).c_str(),
                format_double(g.min).c_str(), g.converged ? "" : "  (not converged)");
  }
  if (all || estimator == "tp") {
    const TpOptimum o = optimum_tp(m, m1);
    std::printf("tp  m1=%s numeric: q*=%s min=%s%s\n", format_double(o.m1).c_str(),
                format_double(o.q_star).c_str(), format_double(o.min_mse).c_str(),
                o.converged ? "" : "  (not converged)");
    if (o.q_closed_form)
      std::printf("tp  transcribed closed form: q=%s (diagnostic only)\n",
                  format_double(*o.q_closed_form).c_str());
    else
      std::printf("tp  transcribed closed form: undefined (zero denominator)\n");
  }
  return 0;
}

int cmd_ingest(const std::string& data_path, const ColumnMapping& cols, long n,
               const std::string& out_path) {
  const Dataset d = ingest(data_path, cols);
  const long eff_n = n > 0 ? n : static_cast<long>(d.size());
  const PopulationParams p = params_from_dataset(d, eff_n);
  const std::string text = write_params(p);
  if (out_path.empty())
    std::cout << text;
  else
    write_params_file(p, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"population-mean estimators under measurement error"};
  app.require_subcommand(1);

  std::string params_path, format = "text", estimator, data_path, out_path;
  std::int64_t reps = 200000;
  std::uint64_t seed = 1;
  int threads = 1;
  double m1 = 1.0, alpha = 1.0, q = 1.0, w1 = 1.0, w2 = 0.0;
  long n_override = 0;
  bool csv = false;
  ColumnMapping cols;

  auto* mom = app.add_subcommand("moments", "derived moments from a params file");
  mom->add_option("--params", params_path, "key=value params file")->required();
  mom->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  auto* rep = app.add_subcommand("report", "MSE/PRE table for every estimator");
  rep->add_option("--params", params_path)->required();
  rep->add_option("--m1", m1, "tp family exponent (default 1)");
  rep->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* disc = app.add_subcommand("discrepancy", "claims-under-test comparison");
  disc->add_option("--params", params_path)->required();
  disc->add_option("--reps", reps, "Monte Carlo replications");
  disc->add_option("--seed", seed);
  disc->add_option("--threads", threads);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo bias/MSE of one estimator");
  sim->add_option("--params", params_path)->required();
  sim->add_option("--estimator", estimator, "mean, t1..t5 or tp")->required();
  sim->add_option("--reps", reps);
  sim->add_option("--seed", seed);
  sim->add_option("--threads", threads, "worker count (never affects results)");
  sim->add_option("--alpha", alpha, "t5 constant");
  sim->add_option("--q", q, "tp constant");
  sim->add_option("--m1", m1, "tp exponent");
  sim->add_option("--w1", w1, "t3 constant");
  sim->add_option("--w2", w2, "t3 constant");
  sim->add_flag("--format-csv,--csv", csv, "CSV output");

  auto* opt = app.add_subcommand("optimum", "closed-form vs numeric optimum constants");
  opt->add_option("--params", params_path)->required();
  opt->add_option("--estimator", estimator, "t3, t5 or tp (default: all)");
  opt->add_option("--m1", m1, "tp exponent");

  auto* ing = app.add_subcommand("ingest-params", "estimate params from a dataset CSV");
  ing->add_option("--data", data_path, "CSV with observed and true columns")->required();
  ing->add_option("--col-y", cols.y_obs, "observed y column name");
  ing->add_option("--col-x", cols.x_obs, "observed x column name");
  ing->add_option("--col-y-true", cols.y_true, "true y column name");
  ing->add_option("--col-x-true", cols.x_true, "true x column name");
  ing->add_option("--n", n_override, "sample size to record (default: row count)");
  ing->add_option("--out", out_path, "write params file here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (mom->parsed()) return cmd_moments(params_path, format);
    if (rep->parsed()) return cmd_report(params_path, m1, format);
    if (disc->parsed()) return cmd_discrepancy(params_path, reps, seed, threads);
    if (sim->parsed())
      return cmd_simulate(params_path, estimator, reps, seed, threads, alpha, q, m1, w1, w2, csv);
    if (opt->parsed()) return cmd_optimum(params_path, estimator, m1);
    if (ing->parsed()) return cmd_ingest(data_path, cols, n_override, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
