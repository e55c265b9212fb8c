#include <doctest.h>

#include <cmath>

#include "memest/numsearch.hpp"
#include "memest/theory.hpp"
#include "test_util.hpp"

using namespace memest;
using test::study_params;

TEST_CASE("golden section on a shifted quadratic") {
  auto f = [](double x) { return (x - 2.0) * (x - 2.0); };
  const auto r = golden_minimize(f, SearchSpec{0.0, 5.0, 1e-8, 200});
  CHECK(r.converged);
  CHECK(r.argmin == doctest::Approx(2.0).epsilon(1e-7));
  CHECK(r.min == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
  // interval shrinks by 1/phi per iteration
  const int bound = static_cast<int>(std::ceil(std::log(5.0 / 1e-8) / std::log(1.618)));
  CHECK(r.iterations <= bound);
}

TEST_CASE("golden section recovers the t5 optimum") {
  const PopulationParams p = study_params();
  const DerivedMoments m = derive_moments(p);
  auto f = [&](double a) { return mse_t5(m, p, a).total; };
  const auto r = golden_minimize(f, SearchSpec{-1.0, 2.0, 1e-10, 200});
  CHECK(r.argmin == doctest::Approx(0.897181117635764).epsilon(1e-7));
  CHECK(r.min == doctest::Approx(13.91759741007192).epsilon(1e-12));
}

TEST_CASE("golden section on a constant function") {
  auto f = [](double) { return 4.25; };
  const auto r = golden_minimize(f, SearchSpec{-1.0, 1.0, 1e-8, 200});
  CHECK(r.min == 4.25);
  CHECK(r.argmin >= -1.0);
  CHECK(r.argmin <= 1.0);
}

TEST_CASE("golden section reports non-convergence when starved") {
  auto f = [](double x) { return x * x; };
  const auto r = golden_minimize(f, SearchSpec{-100.0, 100.0, 1e-10, 3});
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
}

TEST_CASE("search spec validation") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(golden_minimize(f, SearchSpec{1.0, 0.0, 1e-8, 10}), std::invalid_argument);
  CHECK_THROWS_AS(golden_minimize(f, SearchSpec{0.0, 1.0, 1e-13, 10}), std::invalid_argument);
}

TEST_CASE("2d grid refinement on x^2 + y^2") {
  auto f = [](double x, double y) { return x * x + y * y; };
  const auto r = grid_refine_minimize_2d(f, Box2{-1.0, 1.0, -1.0, 1.0}, 17, 6);
  CHECK(r.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-4));
  CHECK(r.y == doctest::Approx(0.0).scale(1.0).epsilon(1e-4));
  CHECK(r.min == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
}

TEST_CASE("2d grid refinement recovers a separable quadratic vertex") {
  auto f = [](double x, double y) {
    return 3.0 * (x - 0.37) * (x - 0.37) + 0.5 * (y + 1.21) * (y + 1.21) + 7.0;
  };
  const auto r = grid_refine_minimize_2d(f, Box2{-2.0, 2.0, -3.0, 3.0}, 17, 8);
  CHECK(r.x == doctest::Approx(0.37).epsilon(1e-4));
  CHECK(r.y == doctest::Approx(-1.21).epsilon(1e-4));
  CHECK(r.min == doctest::Approx(7.0).epsilon(1e-9));
}

TEST_CASE("2d grid refinement recovers the t3 optimum") {
  const PopulationParams p = study_params();
  const DerivedMoments m = derive_moments(p);
  auto f = [&](double w1, double w2) { return mse_t3(m, p, w1, w2).total; };
  const auto r = grid_refine_minimize_2d(f, Box2{0.0, 2.0, -1.0, 2.0}, 17, 8);
  CHECK(r.x == doctest::Approx(0.9991378511767721).epsilon(1e-4));
  CHECK(r.y == doctest::Approx(0.5929236873779814).epsilon(1e-4));
  CHECK(r.min == doctest::Approx(13.905598369843574).epsilon(1e-9));
}

TEST_CASE("2d grid ties break to the lowest index") {
  auto f = [](double, double) { return 1.0; };
  const auto r = grid_refine_minimize_2d(f, Box2{-1.0, 3.0, 2.0, 5.0}, 9, 2);
  CHECK(r.x == -1.0);
  CHECK(r.y == 2.0);
  CHECK(r.min == 1.0);
}

TEST_CASE("2d grid rejects a coarse grid below 8") {
  auto f = [](double, double) { return 0.0; };
  CHECK_THROWS_AS(grid_refine_minimize_2d(f, Box2{0, 1, 0, 1}, 7, 2), std::invalid_argument);
}
