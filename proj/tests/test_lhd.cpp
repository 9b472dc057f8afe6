#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "starlhd/lhd.hpp"

using starlhd::DesignArray;
using starlhd::expand;
using starlhd::LevelArray;
using starlhd::Lhd;
using starlhd::perturb;
using starlhd::PerturbMode;
using starlhd::stratify;

namespace {
bool is_permutation_of_ranks(const starlhd::IntMatrix& values, std::size_t column) {
  std::set<int> seen;
  for (const auto& row : values) seen.insert(row[column]);
  if (seen.size() != values.size()) return false;
  return *seen.begin() == 1 && *seen.rbegin() == static_cast<int>(values.size());
}
}  // namespace

TEST_CASE("expansion yields Latin columns that stratify back to the source") {
  const DesignArray oa = fixtures::oa9();
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 12345ull}) {
    const LevelArray levels = expand(oa, seed);
    for (std::size_t j = 0; j < oa.n_factors(); ++j) {
      CHECK(is_permutation_of_ranks(levels.values(), j));
    }
    CHECK(stratify(levels) == oa.values());
  }
}

TEST_CASE("published expansions satisfy the stratification invariant") {
  // Known valid rank expansions of the 9-run and 16-run reference arrays.
  const LevelArray nine(fixtures::levels9_reference(), {3, 3, 3, 3}, 0);
  CHECK(stratify(nine) == fixtures::oa9().values());

  const LevelArray sixteen(fixtures::levels16_reference(), {8, 8, 8}, 0);
  CHECK(stratify(sixteen) == fixtures::noa16_expected());
}

TEST_CASE("singleton blocks expand deterministically to rank k+1") {
  // n == s_j: level k can only receive rank k + 1.
  starlhd::IntMatrix values;
  for (int i = 0; i < 4; ++i) values.push_back({(i * 3) % 4});
  const DesignArray arr(values, {4}, 0, starlhd::ArrayKind::noa);
  for (std::uint64_t seed : {0ull, 99ull}) {
    const LevelArray levels = expand(arr, seed);
    for (int i = 0; i < 4; ++i) {
      CHECK(levels.values()[static_cast<std::size_t>(i)][0] == arr.values()[static_cast<std::size_t>(i)][0] + 1);
    }
  }
}

TEST_CASE("expansion is deterministic in the seed") {
  const DesignArray noa = starlhd::star_to_noa(fixtures::star16(), fixtures::gens16());
  const LevelArray a = expand(noa, 7);
  const LevelArray b = expand(noa, 7);
  const LevelArray c = expand(noa, 8);
  CHECK(a.values() == b.values());
  CHECK(a.values() != c.values());
}

TEST_CASE("midpoint perturbation centers each cell") {
  const LevelArray levels({{1}, {2}}, {2}, 0);
  const Lhd design = perturb(levels, PerturbMode::midpoint, 0);
  CHECK(design.points()[0][0] == 0.25);
  CHECK(design.points()[1][0] == 0.75);
}

TEST_CASE("uniform perturbation stays inside each cell") {
  const DesignArray oa = fixtures::oa9();
  const LevelArray levels = expand(oa, 3);
  const Lhd design = perturb(levels, PerturbMode::uniform, 11);
  const auto n = static_cast<double>(levels.n_runs());
  for (std::size_t i = 0; i < levels.n_runs(); ++i) {
    for (std::size_t j = 0; j < levels.n_factors(); ++j) {
      const double rank = levels.values()[i][j];
      CHECK(design.points()[i][j] > (rank - 1.0) / n);
      CHECK(design.points()[i][j] < rank / n);
    }
  }
  // Same seed, same design; different seed, different design.
  CHECK(perturb(levels, PerturbMode::uniform, 11).points() == design.points());
  CHECK(perturb(levels, PerturbMode::uniform, 12).points() != design.points());
}

TEST_CASE("random designs have the Latin property") {
  const Lhd single = starlhd::random_lhd(1, 3, 5);
  REQUIRE(single.n_runs() == 1);
  for (double v : single.points()[0]) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }

  const Lhd design = starlhd::random_lhd(16, 2, 5);
  for (std::size_t j = 0; j < design.n_factors(); ++j) {
    std::set<int> cells;
    for (std::size_t i = 0; i < design.n_runs(); ++i) {
      cells.insert(static_cast<int>(design.points()[i][j] * 16.0));
    }
    CHECK(cells.size() == 16);
  }
}

TEST_CASE("two-run two-factor designs realize exactly (2!)^2 rank matrices") {
  std::set<starlhd::IntMatrix> distinct;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    distinct.insert(starlhd::random_level_array(2, 2, seed).values());
  }
  CHECK(distinct.size() == 4);
}

TEST_CASE("level array validation") {
  CHECK_THROWS_AS(LevelArray({{1}, {1}}, {2}, 0), std::invalid_argument);  // repeat
  CHECK_THROWS_AS(LevelArray({{0}, {1}}, {2}, 0), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(LevelArray({{1}, {2}}, {2, 2}, 0), std::invalid_argument);  // level list
}
