#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/rng.hpp"
#include "starlhd/star.hpp"
#include "starlhd/strength.hpp"

using starlhd::ArrayKind;
using starlhd::DesignArray;
using starlhd::GeneratorAssignment;
using starlhd::Star;
using starlhd::star_to_noa;

TEST_CASE("16-run reference array is reproduced bit for bit") {
  const DesignArray noa = star_to_noa(fixtures::star16(), fixtures::gens16());
  REQUIRE(noa.n_runs() == 16);
  REQUIRE(noa.n_factors() == 3);
  CHECK(noa.level_counts() == std::vector<int>{8, 8, 8});
  CHECK(noa.kind() == ArrayKind::noa);
  CHECK(noa.values() == fixtures::noa16_expected());
  // Spot check: run 2 (effect C), column 1 = 0*4 + 0*2 + 1*1.
  CHECK(noa.at(2, 0) == 1);
}

TEST_CASE("row 0 is all zeros and every column is balanced") {
  const Star star = starlhd::construct_star(5, 3, 2);
  const DesignArray noa = star_to_noa(star, starlhd::canonical_assignment(star));
  REQUIRE(noa.n_runs() == 32);
  REQUIRE(noa.n_factors() == 7);
  for (std::size_t j = 0; j < noa.n_factors(); ++j) {
    CHECK(noa.at(0, j) == 0);
    std::vector<int> tally(8, 0);
    for (std::size_t i = 0; i < noa.n_runs(); ++i) tally[static_cast<std::size_t>(noa.at(i, j))]++;
    for (int count : tally) CHECK(count == 4);  // 2^(p - t_j)
  }
}

TEST_CASE("spread-derived arrays are exact strength-2 orthogonal arrays") {
  const Star star = starlhd::spread_to_star(starlhd::construct_spread(4, 2));
  const DesignArray oa = star_to_noa(star, starlhd::canonical_assignment(star));
  CHECK(oa.kind() == ArrayKind::exact_oa);
  REQUIRE(oa.n_runs() == 16);
  REQUIRE(oa.n_factors() == 5);
  const auto report = starlhd::verify_strength(oa, 2);
  CHECK(report.is_exact_strength_r);
  // All 16 level pairs appear exactly once for every column pair.
  for (const auto& subset : report.subsets) {
    CHECK(subset.cell_count == 16);
    CHECK(subset.count_histogram.at(1) == 16);
  }
}

TEST_CASE("a column depends only on its own ray's generators") {
  const Star star = fixtures::star16();
  const DesignArray base = star_to_noa(star, fixtures::gens16());
  // Change ray 2's basis; columns 1 and 3 must not move.
  const auto altered = GeneratorAssignment::from_labels(
      4, {{"A", "B", "ACD"}, {"ABC", "CD", "D"}, {"AC", "BC", "AD"}});
  const DesignArray changed = star_to_noa(star, altered);
  for (std::size_t i = 0; i < base.n_runs(); ++i) {
    CHECK(base.at(i, 0) == changed.at(i, 0));
    CHECK(base.at(i, 2) == changed.at(i, 2));
  }
}

TEST_CASE("permuting a ray's generators relabels its column bijectively") {
  const Star star = fixtures::star16();
  const DesignArray base = star_to_noa(star, fixtures::gens16());
  const auto swapped = GeneratorAssignment::from_labels(
      4, {{"B", "A", "ACD"}, {"C", "D", "ABC"}, {"AC", "BC", "AD"}});
  const DesignArray relabeled = star_to_noa(star, swapped);
  // Each original level of column 1 maps to exactly one new level.
  std::vector<int> mapping(8, -1);
  for (std::size_t i = 0; i < base.n_runs(); ++i) {
    const int from = base.at(i, 0);
    const int to = relabeled.at(i, 0);
    if (mapping[static_cast<std::size_t>(from)] == -1) {
      mapping[static_cast<std::size_t>(from)] = to;
    }
    CHECK(mapping[static_cast<std::size_t>(from)] == to);
  }
  std::vector<int> sorted = mapping;
  std::sort(sorted.begin(), sorted.end());
  for (int level = 0; level < 8; ++level) CHECK(sorted[static_cast<std::size_t>(level)] == level);
}

TEST_CASE("assignments must span their rays") {
  const Star star = fixtures::star16();
  // <C, D, ABC> belongs to ray 2, not ray 1.
  CHECK_THROWS_AS(star_to_noa(star, GeneratorAssignment::from_labels(
                                  4, {{"C", "D", "ABC"},
                                      {"A", "B", "ACD"},
                                      {"AC", "BC", "AD"}})),
                  std::invalid_argument);
  // Too few generators for a rank-3 ray.
  CHECK_THROWS_AS(star_to_noa(star, GeneratorAssignment::from_labels(
                                  4, {{"A", "B"},
                                      {"C", "D", "ABC"},
                                      {"AC", "BC", "AD"}})),
                  std::invalid_argument);
  // Ray count mismatch.
  CHECK_THROWS_AS(star_to_noa(star, GeneratorAssignment::from_labels(
                                  4, {{"A", "B", "ACD"}, {"C", "D", "ABC"}})),
                  std::invalid_argument);
}
