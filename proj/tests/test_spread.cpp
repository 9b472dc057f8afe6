#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "starlhd/spread.hpp"

using starlhd::construct_spread;
using starlhd::Flat;
using starlhd::Spread;

namespace {
// Brute-force partition oracle: every pencil covered exactly once.
bool partitions_geometry(const Spread& spread) {
  std::vector<int> hits(std::size_t{1} << spread.p(), 0);
  for (const Flat& flat : spread.flats()) {
    for (const auto& pt : flat.points()) hits[pt.index()] += 1;
  }
  for (std::uint32_t i = 1; i < (1u << spread.p()); ++i) {
    if (hits[i] != 1) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("primitive polynomial table yields full multiplicative periods") {
  for (int p = 1; p <= 16; ++p) {
    const auto powers = starlhd::primitive_element_powers(p);
    REQUIRE(powers.size() == (1u << p) - 1);
    std::vector<bool> seen(1u << p, false);
    for (const std::uint32_t v : powers) {
      REQUIRE(v != 0);
      REQUIRE(v < (1u << p));
      REQUIRE_FALSE(seen[v]);  // period would collapse on a repeat
      seen[v] = true;
    }
  }
}

TEST_CASE("spread of rank-2 flats in PG(3,2)") {
  const Spread spread = construct_spread(4, 2);
  CHECK(spread.size() == 5);
  CHECK(spread.rank() == 2);
  for (const Flat& flat : spread.flats()) CHECK(flat.points().size() == 3);
  CHECK(partitions_geometry(spread));
}

TEST_CASE("rank-1 spread is the point set") {
  const Spread spread = construct_spread(4, 1);
  CHECK(spread.size() == 15);
  for (const Flat& flat : spread.flats()) CHECK(flat.rank() == 1);
  CHECK(partitions_geometry(spread));
}

TEST_CASE("spread of rank-3 flats in PG(5,2)") {
  const Spread spread = construct_spread(6, 3);
  CHECK(spread.size() == 9);
  // Brute force: the 9 x 7 points are distinct and exhaust all 63.
  std::vector<bool> seen(64, false);
  std::size_t total = 0;
  for (const Flat& flat : spread.flats()) {
    REQUIRE(flat.points().size() == 7);
    for (const auto& pt : flat.points()) {
      REQUIRE_FALSE(seen[pt.index()]);
      seen[pt.index()] = true;
      ++total;
    }
  }
  CHECK(total == 63);
}

TEST_CASE("spread construction is deterministic") {
  const Spread a = construct_spread(6, 2);
  const Spread b = construct_spread(6, 2);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.flats()[i] == b.flats()[i]);
}

TEST_CASE("spread validation") {
  CHECK_THROWS_AS(construct_spread(4, 3), std::invalid_argument);  // 3 does not divide 4
  CHECK_THROWS_AS(construct_spread(17, 1), std::invalid_argument); // beyond the table
  CHECK_THROWS_AS(construct_spread(4, 0), std::invalid_argument);
  // Overlapping flats are rejected.
  const Spread ok = construct_spread(4, 2);
  std::vector<Flat> bad = ok.flats();
  bad.back() = bad.front();
  CHECK_THROWS_AS(Spread(bad, 4), std::invalid_argument);
}
