#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/flat.hpp"
#include "starlhd/gf2.hpp"
#include "starlhd/pencil.hpp"
#include "starlhd/spread.hpp"

namespace starlhd {

/// A star of PG(p-1, 2): mu ray flats sharing a nucleus flat, the rays'
/// exact pairwise intersection. An empty nucleus degenerates the star to a
/// disjoint collection (a spread when covering). The constructor enforces
/// containment and the pairwise-intersection property; covering is a
/// separate check (verify_cover).
class Star {
 public:
  Star(Flat nucleus, std::vector<Flat> rays)
      : nucleus_(std::move(nucleus)), rays_(std::move(rays)), p_(nucleus_.p()) {
    if (rays_.empty()) {
      throw std::invalid_argument("a star needs at least one ray");
    }
    for (const Flat& ray : rays_) {
      if (ray.p() != p_) {
        throw std::invalid_argument("star ray has mismatched geometry");
      }
      if (ray.rank() <= nucleus_.rank()) {
        throw std::invalid_argument("each ray must strictly contain the nucleus");
      }
      if (!ray.contains_all(nucleus_)) {
        throw std::invalid_argument("nucleus is not contained in every ray");
      }
    }
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      for (std::size_t j = i + 1; j < rays_.size(); ++j) {
        if (!(intersect(rays_[i], rays_[j]) == nucleus_)) {
          throw std::invalid_argument(
              "rays " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
              " intersect beyond the nucleus");
        }
      }
    }
    std::stable_sort(rays_.begin(), rays_.end(),
                     [](const Flat& a, const Flat& b) { return a.rank() < b.rank(); });
  }

  int p() const { return p_; }
  const Flat& nucleus() const { return nucleus_; }
  const std::vector<Flat>& rays() const { return rays_; }
  std::size_t mu() const { return rays_.size(); }
  int nucleus_rank() const { return nucleus_.rank(); }

  bool is_balanced() const {
    return std::all_of(rays_.begin(), rays_.end(), [&](const Flat& r) {
      return r.rank() == rays_.front().rank();
    });
  }

  /// Ray ranks t_1 <= ... <= t_mu.
  std::vector<int> ray_ranks() const {
    std::vector<int> out;
    out.reserve(rays_.size());
    for (const Flat& r : rays_) out.push_back(r.rank());
    return out;
  }

 private:
  Flat nucleus_;
  std::vector<Flat> rays_;
  int p_;
};

/// Builds a star from two or more rays, inferring the nucleus as their
/// common intersection. With a single ray the nucleus is ambiguous; pass it
/// explicitly through the Star constructor instead.
inline Star star_from_rays(const std::vector<Flat>& rays) {
  if (rays.size() < 2) {
    throw std::invalid_argument("nucleus inference needs at least two rays");
  }
  std::vector<Pencil> common = rays.front().points();
  for (std::size_t j = 1; j < rays.size(); ++j) {
    std::vector<Pencil> next;
    std::set_intersection(common.begin(), common.end(), rays[j].points().begin(),
                          rays[j].points().end(), std::back_inserter(next));
    common = std::move(next);
  }
  return Star(Flat::from_points(common, rays.front().p()), rays);
}

/// A spread is the nucleus-free special case of a covering star.
inline Star spread_to_star(const Spread& spread) {
  return Star(Flat::empty(spread.p()), spread.flats());
}

/// Result of the covering check: which pencils outside the nucleus are
/// missed by every ray, and which are hit more than once.
struct CoverReport {
  bool covers = false;
  std::vector<Pencil> missing;
  std::vector<Pencil> multiply_covered;
};

/// True iff the rays jointly contain all 2^p - 1 pencils.
inline CoverReport verify_cover(const Star& star) {
  const int p = star.p();
  std::vector<int> hits(std::size_t{1} << p, 0);
  for (const Flat& ray : star.rays()) {
    for (const Pencil& pt : ray.points()) hits[pt.index()] += 1;
  }
  CoverReport report;
  for (std::uint32_t i = 1; i < (1u << p); ++i) {
    const Pencil pt(i, p);
    if (hits[i] == 0) {
      report.missing.push_back(pt);
    } else if (hits[i] > 1 && !star.nucleus().contains(pt)) {
      report.multiply_covered.push_back(pt);
    }
  }
  report.covers = report.missing.empty();
  return report;
}

/// Report of the necessary (not sufficient) existence conditions for a
/// covering star with nucleus rank t0 and ray ranks t_1 <= ... <= t_mu:
///   (i)  2^(p-t0) - 1 == sum of (2^(t_i-t0) - 1)
///   (ii) t_i + t_j - t0 <= p for every pair i != j.
struct StarFeasibilityReport {
  bool feasible = false;
  bool point_count_ok = false;       // condition (i)
  bool pairwise_rank_ok = false;     // condition (ii)
  std::uint64_t points_to_cover = 0;
  std::uint64_t points_supplied = 0;
  std::vector<std::pair<int, int>> oversized_pairs;  // 1-based ray indices
};

inline StarFeasibilityReport check_star_feasibility(
    int p, int t0, const std::vector<int>& ray_ranks) {
  detail::check_factor_count(p);
  if (t0 < 0 || t0 >= p) {
    throw std::invalid_argument("nucleus rank t0 must satisfy 0 <= t0 < p");
  }
  if (ray_ranks.empty()) {
    throw std::invalid_argument("ray rank list must not be empty");
  }
  if (!std::is_sorted(ray_ranks.begin(), ray_ranks.end())) {
    throw std::invalid_argument("ray ranks must be sorted ascending");
  }
  StarFeasibilityReport report;
  report.points_to_cover = (std::uint64_t{1} << (p - t0)) - 1;
  for (int t : ray_ranks) {
    if (t <= t0) {
      throw std::invalid_argument("every ray rank must exceed the nucleus rank");
    }
    report.points_supplied += (std::uint64_t{1} << (t - t0)) - 1;
  }
  report.point_count_ok = report.points_to_cover == report.points_supplied;
  report.pairwise_rank_ok = true;
  for (std::size_t i = 0; i < ray_ranks.size(); ++i) {
    for (std::size_t j = i + 1; j < ray_ranks.size(); ++j) {
      if (ray_ranks[i] + ray_ranks[j] - t0 > p) {
        report.pairwise_rank_ok = false;
        report.oversized_pairs.emplace_back(static_cast<int>(i + 1),
                                            static_cast<int>(j + 1));
      }
    }
  }
  report.feasible = report.point_count_ok && report.pairwise_rank_ok;
  return report;
}

/// The lexicographically smallest rank-t0 flat: generators picked greedily
/// by ascending effect index, giving the point set {1, ..., 2^t0 - 1}.
inline Flat default_nucleus(int p, int t0) {
  if (t0 == 0) return Flat::empty(p);
  std::vector<Pencil> generators;
  generators.reserve(static_cast<std::size_t>(t0));
  for (int l = 0; l < t0; ++l) generators.emplace_back(1u << l, p);
  return span(generators);
}

/// Constructs a balanced covering star St(mu, t, t0) of PG(p-1, 2) with
/// mu = (2^(p-t0) - 1) / (2^(t-t0) - 1). The quotient geometry by the
/// nucleus is coordinatized on the non-pivot bit positions of the nucleus
/// basis; a (t-t0-1)-spread of that quotient is lifted through the nucleus
/// to form the rays. Deterministic for a given nucleus.
inline Star construct_star(int p, int t, int t0,
                           const std::optional<Flat>& nucleus = std::nullopt) {
  detail::check_factor_count(p);
  if (!(0 <= t0 && t0 < t && t < p)) {
    throw std::invalid_argument("star parameters must satisfy 0 <= t0 < t < p");
  }
  if ((p - t0) % (t - t0) != 0) {
    throw std::invalid_argument(
        "no balanced covering star: (t - t0) = " + std::to_string(t - t0) +
        " does not divide (p - t0) = " + std::to_string(p - t0));
  }
  Flat core = nucleus.value_or(default_nucleus(p, t0));
  if (core.p() != p) {
    throw std::invalid_argument("nucleus geometry does not match p");
  }
  if (core.rank() != t0) {
    throw std::invalid_argument("nucleus rank " + std::to_string(core.rank()) +
                                " does not match t0 = " + std::to_string(t0));
  }

  // Reduce through the nucleus: zero out its pivot coordinates, leaving the
  // quotient coordinatized on the remaining bit positions.
  gf2::Echelon echelon;
  for (const Pencil& g : core.generators()) echelon.insert(g.bits());
  std::vector<int> pivots = echelon.pivot_positions();
  std::sort(pivots.begin(), pivots.end());
  std::vector<int> free_bits;
  for (int b = 0; b < p; ++b) {
    if (!std::binary_search(pivots.begin(), pivots.end(), b)) free_bits.push_back(b);
  }
  const int quotient_rank = p - t0;
  const auto embed = [&](std::uint32_t w) {
    std::uint32_t v = 0;
    for (int q = 0; q < quotient_rank; ++q) {
      if (w & (1u << q)) v |= 1u << free_bits[static_cast<std::size_t>(q)];
    }
    return v;
  };

  const Spread quotient = construct_spread(quotient_rank, t - t0);
  std::vector<Flat> rays;
  rays.reserve(quotient.size());
  for (const Flat& piece : quotient.flats()) {
    std::vector<Pencil> generators = core.generators();
    for (const Pencil& g : piece.generators()) {
      generators.emplace_back(embed(g.bits()), p);
    }
    rays.push_back(span(generators));
  }
  return Star(std::move(core), std::move(rays));
}

}  // namespace starlhd
