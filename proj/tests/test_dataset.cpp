#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "memest/dataset.hpp"
#include "memest/theory.hpp"

using namespace memest;

namespace {

std::string data_path(const char* name) { return std::string(MEMEST_DATA_DIR) + "/" + name; }

struct TempCsv {
  std::string path;
  explicit TempCsv(const std::string& contents) {
    path = std::string("memest_test_") + std::to_string(counter()++) + ".csv";
    std::ofstream out(path);
    out << contents;
  }
  ~TempCsv() { std::remove(path.c_str()); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("bundled dataset reproduces the parameter table exactly") {
  const Dataset d = ingest(data_path("consumption_income.csv"));
  REQUIRE(d.size() == 10);
  REQUIRE(d.has_true_values());
  const PopulationParams p = params_from_dataset(d, 10);
  CHECK(p.mu_y == 127.0);
  CHECK(p.mu_x == 170.0);
  CHECK(p.sigma2_y == 1278.0);
  CHECK(p.sigma2_x == 3300.0);
  CHECK(p.sigma2_u == 36.0);
  CHECK(p.sigma2_v == 36.0);
  CHECK(std::fabs(p.rho - 0.964) <= 0.0005);
  CHECK(p.population_size.value() == 10);
}

TEST_CASE("observed equal to true gives zero error variances") {
  TempCsv f(
      "y_obs,x_obs,y_true,x_true\n"
      "1,2,1,2\n"
      "3,4,3,4\n"
      "5,9,5,9\n");
  const PopulationParams p = params_from_dataset(ingest(f.path), 3);
  CHECK(p.sigma2_u == 0.0);
  CHECK(p.sigma2_v == 0.0);
}

TEST_CASE("identical rows yield zero variances rejected downstream") {
  TempCsv f(
      "y_obs,x_obs,y_true,x_true\n"
      "2,3,2,3\n"
      "2,3,2,3\n");
  const PopulationParams p = params_from_dataset(ingest(f.path), 2);
  CHECK(p.sigma2_y == 0.0);
  CHECK(p.sigma2_x == 0.0);
  const DerivedMoments m = derive_moments(p);
  CHECK_THROWS_AS(optimum_t3(m, p.mu_y), std::domain_error);
}

TEST_CASE("dataset without true columns is ingestible but not estimable") {
  TempCsv f(
      "y_obs,x_obs\n"
      "1,2\n"
      "3,4\n");
  const Dataset d = ingest(f.path);
  CHECK_FALSE(d.has_true_values());
  CHECK_THROWS_WITH_AS(params_from_dataset(d, 2),
                       doctest::Contains("sigma2_u and sigma2_v cannot be estimated"),
                       std::invalid_argument);
}

TEST_CASE("non-numeric cell names its row and column") {
  TempCsv f(
      "y_obs,x_obs,y_true,x_true\n"
      "1,2,1,2\n"
      "3,abc,3,4\n");
  CHECK_THROWS_WITH_AS(ingest(f.path), doctest::Contains("row 3, column 'x_obs'"),
                       std::invalid_argument);
}

TEST_CASE("structural errors") {
  SUBCASE("missing file") {
    CHECK_THROWS_AS(ingest("does_not_exist.csv"), std::invalid_argument);
  }
  SUBCASE("fewer than two rows") {
    TempCsv f("y_obs,x_obs\n1,2\n");
    CHECK_THROWS_AS(ingest(f.path), std::invalid_argument);
  }
  SUBCASE("ragged row") {
    TempCsv f("y_obs,x_obs\n1,2\n3\n");
    CHECK_THROWS_WITH_AS(ingest(f.path), doctest::Contains("row 3"), std::invalid_argument);
  }
  SUBCASE("only one true column present") {
    TempCsv f("y_obs,x_obs,y_true\n1,2,1\n3,4,3\n");
    CHECK_THROWS_AS(ingest(f.path), std::invalid_argument);
  }
  SUBCASE("missing required column") {
    TempCsv f("a,b\n1,2\n3,4\n");
    CHECK_THROWS_AS(ingest(f.path), std::invalid_argument);
  }
}

TEST_CASE("custom column mapping") {
  TempCsv f(
      "cons,income,cons0,income0\n"
      "95.5,65.25,88,80\n"
      "73.5,98.5,70,100\n");
  ColumnMapping cols;
  cols.y_obs = "cons";
  cols.x_obs = "income";
  cols.y_true = "cons0";
  cols.x_true = "income0";
  const Dataset d = ingest(f.path, cols);
  CHECK(d.size() == 2);
  CHECK(d.y_true[0] == 88.0);
  CHECK(d.x_obs[1] == 98.5);
}
