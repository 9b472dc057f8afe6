#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "starlhd/simulation.hpp"

using starlhd::LabeledAssignment;
using starlhd::percentile;
using starlhd::quartiles;
using starlhd::run_simulation;
using starlhd::SimulationResult;

namespace {
std::vector<LabeledAssignment> reference_configurations() {
  return {{"g1_violation", fixtures::gens16_g1_violating()},
          {"g2_violation", fixtures::gens16_g2_violating()},
          {"g3_violation", fixtures::gens16_g3_violating()},
          {"compliant", fixtures::gens16_compliant()}};
}
}  // namespace

TEST_CASE("simulation shape and determinism") {
  const auto star = fixtures::star16();
  const auto configs = reference_configurations();

  const auto once = run_simulation(star, configs, 5, 40);
  REQUIRE(once.size() == 4);
  for (const SimulationResult& result : once) {
    CHECK(result.mid_samples.size() == 5);
    CHECK(result.aid_samples.size() == 5);
    CHECK(result.n_reps == 5);
  }

  const auto again = run_simulation(star, configs, 5, 40);
  for (std::size_t c = 0; c < once.size(); ++c) {
    CHECK(once[c].mid_samples == again[c].mid_samples);
    CHECK(once[c].aid_samples == again[c].aid_samples);
  }

  const auto other_seed = run_simulation(star, configs, 5, 41);
  CHECK(once[0].mid_samples != other_seed[0].mid_samples);
}

TEST_CASE("single-replicate simulation") {
  const auto star = fixtures::star16();
  const auto results = run_simulation(star, {{"only", fixtures::gens16()}}, 1, 9);
  REQUIRE(results.size() == 1);
  CHECK(results[0].mid_samples.size() == 1);
}

TEST_CASE("compliant assignments dominate the G3-violating one") {
  const auto star = fixtures::star16();
  const auto results = run_simulation(star, reference_configurations(), 100, 17);
  const SimulationResult& g3 = results[2];
  const SimulationResult& ok = results[3];
  CHECK(percentile(ok.mid_samples, 0.5) > percentile(g3.mid_samples, 0.5));
  CHECK(percentile(ok.aid_samples, 0.5) > percentile(g3.aid_samples, 0.5));
}

TEST_CASE("percentiles interpolate order statistics") {
  const std::vector<double> values = {4.0, 1.0, 3.0, 2.0};
  CHECK(percentile(values, 0.0) == 1.0);
  CHECK(percentile(values, 1.0) == 4.0);
  CHECK(percentile(values, 0.5) == 2.5);
  const auto q = quartiles(values);
  CHECK(q.q1 == 1.75);
  CHECK(q.median == 2.5);
  CHECK(q.q3 == 3.25);
  CHECK_THROWS_AS(percentile({}, 0.5), std::invalid_argument);
}

TEST_CASE("simulation validation") {
  const auto star = fixtures::star16();
  CHECK_THROWS_AS(run_simulation(star, {}, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_simulation(star, {{"x", fixtures::gens16()}}, 0, 1),
                  std::invalid_argument);
}
