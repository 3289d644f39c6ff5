#include <cmath>

#include "doctest.h"
#include "lhv/csv.hpp"
#include "lhv/svg.hpp"

using namespace lhv;

TEST_CASE("format_double round-trips and is plain") {
  for (double v : {0.0, 1.0, 1.0 / 3.0, 8.0 / 15.0, 0.105, 1e-9, -2.5}) {
    CHECK(std::stod(csv::format_double(v)) == v);
  }
  CHECK(csv::format_double(0.5) == "0.5");
  CHECK(csv::format_double(1.0) == "1");
}

TEST_CASE("marginals CSV round-trip") {
  MarginalSeries series;
  series.method = MarginalMethod::Exact;
  series.times = {0, 1, 2};
  series.probs = {{1.0, 0.0}, {0.9, 0.1}, {1.0 / 3.0, 2.0 / 3.0}};
  const std::string text = csv::marginals_csv(series, "P_classical");
  CHECK(text.substr(0, text.find('\n')) == "t,P_classical_1,P_classical_2");
  const MarginalSeries parsed = csv::parse_marginals(text);
  CHECK(parsed.times == series.times);
  CHECK(parsed.probs == series.probs);

  series.method = MarginalMethod::MonteCarlo;
  series.stderrs = {{0.0, 0.0}, {0.01, 0.01}, {0.02, 0.02}};
  const MarginalSeries with_err =
      csv::parse_marginals(csv::marginals_csv(series, "P_classical"));
  CHECK(with_err.stderrs == series.stderrs);
}

TEST_CASE("matrix CSV parse") {
  const Eigen::MatrixXd m = csv::parse_matrix("0,-0.01\n0.01,0\n");
  CHECK(m.rows() == 2);
  CHECK(m(1, 0) == 0.01);
  CHECK_THROWS(csv::parse_matrix("1,2\n3\n"));
  CHECK_THROWS(csv::parse_matrix("a,b\n"));
}

TEST_CASE("svg chart contains the polylines and labels") {
  const std::string chart = svg::line_chart(
      "demo", {0, 1, 2}, {{"tv", {0.0, 0.1, 0.0}}, {"p", {1.0, 0.5, 1.0}}});
  CHECK(chart.find("<svg") != std::string::npos);
  CHECK(chart.find("<polyline") != std::string::npos);
  CHECK(chart.find("tv") != std::string::npos);
  // deterministic output
  CHECK(chart == svg::line_chart("demo", {0, 1, 2},
                                 {{"tv", {0.0, 0.1, 0.0}}, {"p", {1.0, 0.5, 1.0}}}));
}
