#include <doctest.h>

#include <cmath>

#include "memest/estimators.hpp"
#include "test_util.hpp"

using namespace memest;
using test::random_sample;

namespace {

Sample make_sample(std::initializer_list<double> ys, std::initializer_list<double> xs) {
  Sample s;
  s.y_obs = ys;
  s.x_obs = xs;
  return s;
}

}  // namespace

TEST_CASE("sample mean") {
  CHECK(est_mean(make_sample({1, 3}, {1, 1})) == 2.0);
  CHECK(est_mean(make_sample({5, 5, 5, 5}, {2, 2, 2, 2})) == 5.0);
  CHECK_THROWS_AS(est_mean(Sample{}), std::domain_error);
}

TEST_CASE("ratio estimator") {
  const Sample s = make_sample({8, 12}, {3, 5});  // ybar 10, xbar 4
  CHECK(est_t1(s, 4.0) == doctest::Approx(10.0));
  CHECK(est_t1(s, 8.0) == doctest::Approx(20.0));
  // with mu_x equal to the sample mean the ratio collapses to ybar
  CHECK(est_t1(s, s.x_bar()) == doctest::Approx(est_mean(s)).epsilon(1e-15));
  CHECK_THROWS_AS(est_t1(make_sample({1, 1}, {-2, 2}), 4.0), std::domain_error);
}

TEST_CASE("exponential ratio estimator") {
  const Sample s = make_sample({1, 1}, {1, 1});
  CHECK(est_t2(s, 1.0) == doctest::Approx(1.0));
  CHECK(est_t2(s, 3.0) == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  const Sample s2 = make_sample({1, 1}, {2, 2});
  CHECK(est_t2(s2, 3.0) == doctest::Approx(std::exp(0.2)).epsilon(1e-15));
  CHECK_THROWS_AS(est_t2(make_sample({1, 1}, {-3, -3}), 3.0), std::domain_error);
}

TEST_CASE("regression-type estimator") {
  const Sample s = make_sample({9, 11}, {4, 4});
  CHECK(est_t3(s, 7.0, 1.0, 0.0) == doctest::Approx(10.0));
  CHECK(est_t3(s, 7.0, 0.0, 1.0) == doctest::Approx(3.0));
  CHECK(est_t3(s, 4.0, 0.25, 123.0) == doctest::Approx(2.5));  // xbar == mu_x
}

TEST_CASE("exponential product estimator") {
  const Sample s = make_sample({1, 1}, {3, 3});
  CHECK(est_t4(s, 3.0) == doctest::Approx(1.0));
  CHECK(est_t4(s, 1.0) == doctest::Approx(std::exp(0.5)).epsilon(1e-15));
  // log t2 + log t4 = 2 log ybar: the exponents cancel
  std::mt19937_64 gen(3);
  for (int i = 0; i < 100; ++i) {
    Sample r = random_sample(gen);
    for (auto& y : r.y_obs) y = std::fabs(y) + 1.0;
    const double mu_x = 50.0;
    CHECK(std::log(est_t2(r, mu_x)) + std::log(est_t4(r, mu_x)) ==
          doctest::Approx(2.0 * std::log(r.y_bar())).epsilon(1e-12));
  }
}

TEST_CASE("ratio-product combination") {
  const Sample s = make_sample({8, 12}, {3, 5});  // ybar 10, xbar 4
  CHECK(est_t5(s, 8.0, 1.0) == doctest::Approx(est_t1(s, 8.0)).epsilon(1e-15));
  CHECK(est_t5(s, 8.0, 0.0) == doctest::Approx(5.0));
  CHECK(est_t5(s, 4.0, 0.37) == doctest::Approx(10.0));  // xbar == mu_x, any alpha
  CHECK_THROWS_AS(est_t5(s, 0.0, 0.5), std::domain_error);
}

TEST_CASE("proposed family reductions") {
  std::mt19937_64 gen(4);
  for (int i = 0; i < 500; ++i) {
    const Sample s = random_sample(gen);
    const double mu_x = std::uniform_real_distribution<double>(5.0, 100.0)(gen);
    CHECK(est_tp(s, mu_x, 1.0, 1.0) ==
          doctest::Approx(est_t1(s, mu_x)).epsilon(1e-12));
    CHECK(est_tp(s, mu_x, 1.0, 0.0) ==
          doctest::Approx(est_t2(s, mu_x)).epsilon(1e-12));
    CHECK(est_tp(s, mu_x, 0.0, 0.0) ==
          doctest::Approx(est_t4(s, mu_x)).epsilon(1e-12));
    // at m1 = 1 the family is the alpha-combination with alpha = q
    const double q = std::uniform_real_distribution<double>(-1.0, 2.0)(gen);
    CHECK(est_tp(s, mu_x, q, 1.0) ==
          doctest::Approx(est_t5(s, mu_x, q)).epsilon(1e-12));
  }
}

TEST_CASE("proposed family returns ybar when xbar equals mu_x") {
  const Sample s = make_sample({9, 11}, {6, 8});  // xbar 7
  CHECK(est_tp(s, 7.0, 0.3, 0.6) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(est_tp(s, 7.0, -1.0, 2.0) == doctest::Approx(10.0).epsilon(1e-15));
}

TEST_CASE("proposed family rejects non-positive base with fractional exponent") {
  const Sample s = make_sample({1, 1}, {-4, 2});  // xbar -1
  CHECK_THROWS_AS(est_tp(s, 3.0, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(est_tp(make_sample({1, 1}, {2, 2}), -3.0, 0.5, 0.5), std::domain_error);
}

TEST_CASE("estimators are scale equivariant in y") {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 200; ++i) {
    const Sample s = random_sample(gen);
    const double k = std::uniform_real_distribution<double>(0.1, 10.0)(gen);
    const double mu_x = 40.0;
    Sample scaled = s;
    for (auto& y : scaled.y_obs) y *= k;
    CHECK(est_mean(scaled) == doctest::Approx(k * est_mean(s)).epsilon(1e-12));
    CHECK(est_t1(scaled, mu_x) == doctest::Approx(k * est_t1(s, mu_x)).epsilon(1e-12));
    CHECK(est_t2(scaled, mu_x) == doctest::Approx(k * est_t2(s, mu_x)).epsilon(1e-12));
    CHECK(est_t4(scaled, mu_x) == doctest::Approx(k * est_t4(s, mu_x)).epsilon(1e-12));
    CHECK(est_t5(scaled, mu_x, 0.7) == doctest::Approx(k * est_t5(s, mu_x, 0.7)).epsilon(1e-12));
    CHECK(est_tp(scaled, mu_x, 0.8, 0.5) ==
          doctest::Approx(k * est_tp(s, mu_x, 0.8, 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("ratio and product estimates multiply to ybar squared") {
  std::mt19937_64 gen(6);
  for (int i = 0; i < 200; ++i) {
    const Sample s = random_sample(gen);
    const double mu_x = 25.0;
    const double product_form = s.y_bar() * s.x_bar() / mu_x;
    CHECK(est_t1(s, mu_x) * product_form ==
          doctest::Approx(s.y_bar() * s.y_bar()).epsilon(1e-12));
  }
}

TEST_CASE("estimator spec dispatch and parsing") {
  const Sample s = make_sample({8, 12}, {3, 5});
  EstimatorSpec spec;
  spec.kind = EstimatorKind::T5;
  spec.alpha = 1.0;
  CHECK(spec.evaluate(s, 8.0) == doctest::Approx(est_t1(s, 8.0)).epsilon(1e-15));
  CHECK(parse_estimator_kind("T1") == EstimatorKind::T1);
  CHECK(parse_estimator_kind("mean") == EstimatorKind::Mean);
  CHECK(parse_estimator_kind("tp") == EstimatorKind::Tp);
  CHECK_THROWS_AS(parse_estimator_kind("t9"), std::invalid_argument);
}
