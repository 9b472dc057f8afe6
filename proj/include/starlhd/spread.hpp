#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/flat.hpp"
#include "starlhd/pencil.hpp"

namespace starlhd {

/// One primitive polynomial over GF(2) per degree p = 1..16, encoded with the
/// x^p term included (e.g. 0b10011 = x^4 + x + 1). The root x of each is a
/// primitive element of GF(2^p), which is what construct_spread relies on;
/// the unit suite checks the full multiplicative period of every entry.
inline constexpr std::array<std::uint32_t, kMaxFactors + 1> kPrimitivePolynomials = {
    0,        // unused
    0x3,      // x + 1
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

/// Successive powers x^0, x^1, ..., x^(2^p - 2) of the primitive element of
/// GF(2^p) in the polynomial basis. Every nonzero field element appears
/// exactly once.
inline std::vector<std::uint32_t> primitive_element_powers(int p) {
  detail::check_factor_count(p);
  const std::uint32_t poly = kPrimitivePolynomials[static_cast<std::size_t>(p)];
  const std::uint32_t order = (1u << p) - 1;
  std::vector<std::uint32_t> powers(order);
  std::uint32_t v = 1;
  for (std::uint32_t k = 0; k < order; ++k) {
    powers[k] = v;
    v <<= 1;
    if (v >> p) v ^= poly;
  }
  return powers;
}

/// A balanced (t-1)-spread: pairwise disjoint rank-t flats partitioning all
/// 2^p - 1 pencils of PG(p-1, 2). Immutable after construction; the
/// constructor verifies the partition.
class Spread {
 public:
  Spread(std::vector<Flat> flats, int p) : flats_(std::move(flats)), p_(p) {
    detail::check_factor_count(p);
    if (flats_.empty()) {
      throw std::invalid_argument("a spread needs at least one flat");
    }
    const int t = flats_.front().rank();
    std::vector<bool> seen(std::size_t{1} << p, false);
    std::size_t covered = 0;
    for (const Flat& flat : flats_) {
      if (flat.p() != p) {
        throw std::invalid_argument("spread flat has mismatched geometry");
      }
      if (flat.rank() != t) {
        throw std::invalid_argument("spread flats must share one rank");
      }
      for (const Pencil& pt : flat.points()) {
        if (seen[pt.index()]) {
          throw std::invalid_argument("spread flats overlap at " + pt.label());
        }
        seen[pt.index()] = true;
        ++covered;
      }
    }
    if (covered != (std::size_t{1} << p) - 1) {
      throw std::invalid_argument("spread does not cover all pencils");
    }
  }

  int p() const { return p_; }
  int rank() const { return flats_.front().rank(); }
  std::size_t size() const { return flats_.size(); }
  const std::vector<Flat>& flats() const { return flats_; }

 private:
  std::vector<Flat> flats_;
  int p_;
};

/// Builds the balanced (t-1)-spread of PG(p-1, 2) for t | p by viewing the
/// nonzero elements of GF(2^p) as points and splitting them into
/// multiplicative cosets of the subfield GF(2^t); each coset plus zero is a
/// rank-t GF(2)-subspace. Flats are returned sorted by smallest point index.
inline Spread construct_spread(int p, int t) {
  detail::check_factor_count(p);
  if (t < 1 || t > p) {
    throw std::invalid_argument("spread rank t must satisfy 1 <= t <= p");
  }
  if (p % t != 0) {
    throw std::invalid_argument("no balanced (t-1)-spread of PG(p-1,2): t = " +
                                std::to_string(t) + " does not divide p = " +
                                std::to_string(p));
  }
  const std::vector<std::uint32_t> powers = primitive_element_powers(p);
  const std::uint32_t order = (1u << p) - 1;
  const std::uint32_t subgroup = (1u << t) - 1;
  const std::uint32_t coset_count = order / subgroup;

  std::vector<Flat> flats;
  flats.reserve(coset_count);
  for (std::uint32_t c = 0; c < coset_count; ++c) {
    std::vector<Pencil> points;
    points.reserve(subgroup);
    for (std::uint32_t k = 0; k < subgroup; ++k) {
      points.emplace_back(powers[c + k * coset_count], p);
    }
    flats.push_back(Flat::from_points(points, p));
  }
  std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    return a.points().front() < b.points().front();
  });
  return Spread(std::move(flats), p);
}

}  // namespace starlhd
