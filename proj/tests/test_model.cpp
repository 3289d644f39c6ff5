#include "lhv/model.hpp"

#include "doctest.h"

using namespace lhv;

namespace {

ModelSpec two_state_spec() {
  ModelSpec spec;
  spec.n_primary = 2;
  spec.periods = {3, 5};
  spec.crossings = {{0, 1, 0, 0, +1}};
  return spec;
}

}  // namespace

TEST_CASE("valid spec passes validation") {
  const auto report = validate_spec(two_state_spec());
  CHECK(report.ok);
  CHECK(report.issues.empty());
}

TEST_CASE("non-coprime periods are rejected") {
  ModelSpec spec;
  spec.n_primary = 2;
  spec.periods = {4, 6};
  const auto report = validate_spec(spec);
  CHECK_FALSE(report.ok);
  CHECK(report.has("NOT_COPRIME"));
}

TEST_CASE("out-of-range crossing site is rejected") {
  ModelSpec spec = two_state_spec();
  spec.crossings = {{0, 1, 3, 2, +1}};  // a = 3 >= L_0 = 3
  const auto report = validate_spec(spec);
  CHECK_FALSE(report.ok);
  CHECK(report.has("SITE_OUT_OF_RANGE"));
}

TEST_CASE("duplicate sites, bad pairs and bad signs are reported") {
  ModelSpec spec = two_state_spec();
  spec.crossings.push_back({0, 1, 0, 0, -1});
  CHECK(validate_spec(spec).has("DUPLICATE_SITE"));

  spec = two_state_spec();
  spec.crossings = {{1, 0, 0, 0, +1}};
  CHECK(validate_spec(spec).has("BAD_PAIR"));

  spec = two_state_spec();
  spec.crossings = {{0, 1, 0, 0, 2}};
  CHECK(validate_spec(spec).has("BAD_SIGN"));
}

TEST_CASE("perturbativity warning above the 0.1 ratio") {
  ModelSpec spec = two_state_spec();
  spec.crossings.clear();
  for (long long a = 0; a < 2; ++a) {
    for (long long b = 0; b < 1; ++b) spec.crossings.push_back({0, 1, a, b, +1});
  }
  // 2/15 > 0.1
  const auto report = validate_spec(spec);
  CHECK(report.ok);
  CHECK(report.has("PERTURBATIVITY"));
}

TEST_CASE("overlapping-pair crossings sharing an axis coordinate warn") {
  ModelSpec spec;
  spec.n_primary = 3;
  spec.periods = {3, 5, 7};
  spec.crossings = {{0, 1, 1, 2, +1}, {0, 2, 1, 4, +1}};  // share k_0 = 1
  const auto report = validate_spec(spec);
  CHECK(report.ok);
  CHECK(report.has("SIMULTANEOUS_OVERLAP"));

  spec.crossings[1].a = 2;  // different coordinate on the shared axis
  CHECK_FALSE(validate_spec(spec).has("SIMULTANEOUS_OVERLAP"));
}

TEST_CASE("parse maps a minimal document") {
  const std::string text = R"({
    "n_primary": 2,
    "periods": [3, 5],
    "crossings": [{"pair": [0, 1], "site": [0, 0], "sign": 1}]
  })";
  const ModelSpec spec = parse_spec(text);
  CHECK(spec == two_state_spec());
}

TEST_CASE("missing periods is a schema error naming the field") {
  CHECK_THROWS_WITH_AS(parse_spec(R"({"n_primary": 2})"),
                       doctest::Contains("periods"), SpecError);
}

TEST_CASE("unknown fields are rejected") {
  CHECK_THROWS_AS(
      parse_spec(R"({"n_primary": 2, "periods": [3, 5], "bogus": 1})"),
      SpecError);
}

TEST_CASE("duplicate sites parse fine, validation flags them") {
  const std::string text = R"({
    "n_primary": 2,
    "periods": [3, 5],
    "crossings": [
      {"pair": [0, 1], "site": [1, 2], "sign": 1},
      {"pair": [0, 1], "site": [1, 2], "sign": -1}
    ]
  })";
  const ModelSpec spec = parse_spec(text);
  CHECK(spec.crossings.size() == 2);
  CHECK(validate_spec(spec).has("DUPLICATE_SITE"));
}

TEST_CASE("serialize/parse round-trip") {
  ModelSpec spec = two_state_spec();
  spec.delta_t = 0.25;
  spec.crossings.push_back({0, 1, 2, 4, -1});
  CHECK(parse_spec(serialize_spec(spec)) == spec);

  ModelSpec doubled;
  doubled.n_primary = 4;
  doubled.periods = {3, 5, 7, 11};
  doubled.cbit_doubled = true;
  doubled.crossings = {{0, 2, 1, 3, +1}, {1, 3, 0, 0, -1}};
  CHECK(parse_spec(serialize_spec(doubled)) == doubled);
}

TEST_CASE("validation is deterministic") {
  ModelSpec spec = two_state_spec();
  spec.periods = {4, 6};
  const auto a = validate_spec(spec);
  const auto b = validate_spec(spec);
  REQUIRE(a.issues.size() == b.issues.size());
  for (size_t i = 0; i < a.issues.size(); ++i) {
    CHECK(a.issues[i].code == b.issues[i].code);
    CHECK(a.issues[i].message == b.issues[i].message);
  }
}
