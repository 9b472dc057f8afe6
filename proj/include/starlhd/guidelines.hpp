#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "starlhd/flat.hpp"
#include "starlhd/gf2.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/pencil.hpp"
#include "starlhd/rng.hpp"
#include "starlhd/star.hpp"

namespace starlhd {

/// Generator-selection guidelines for space-filling star-derived designs:
///   G1: the first generator of every ray lies outside the nucleus.
///   G2: generators at the same position differ across rays.
///   G3: the interaction of the position-(l1, l2) generators differs across
///       rays (GF(2) sum, i.e. the effect product).
/// Ray and position indices in the violation records are 1-based, matching
/// the delta_l^(j) notation used throughout.

struct G1Violation {
  int ray = 0;        // 1-based
  Pencil generator;   // the offending first generator
};

struct G2Violation {
  int position = 0;   // 1-based l
  int ray1 = 0;       // 1-based, ray1 < ray2
  int ray2 = 0;
  Pencil generator;   // the shared generator
};

struct G3Violation {
  int position1 = 0;  // 1-based, position1 < position2
  int position2 = 0;
  int ray1 = 0;       // 1-based, ray1 < ray2
  int ray2 = 0;
  Pencil common_sum;  // the coinciding interaction
};

struct GuidelineReport {
  std::vector<G1Violation> g1;
  std::vector<G2Violation> g2;
  std::vector<G3Violation> g3;

  bool compliant() const { return g1.empty() && g2.empty() && g3.empty(); }
};

inline GuidelineReport check_guidelines(const GeneratorAssignment& gens,
                                        const Flat& nucleus) {
  GuidelineReport report;
  const auto& rays = gens.per_ray();
  const int mu = static_cast<int>(rays.size());

  for (int j = 0; j < mu; ++j) {
    if (nucleus.contains(rays[static_cast<std::size_t>(j)].front())) {
      report.g1.push_back({j + 1, rays[static_cast<std::size_t>(j)].front()});
    }
  }

  for (int j1 = 0; j1 < mu; ++j1) {
    for (int j2 = j1 + 1; j2 < mu; ++j2) {
      const auto& a = rays[static_cast<std::size_t>(j1)];
      const auto& b = rays[static_cast<std::size_t>(j2)];
      const int shared = static_cast<int>(std::min(a.size(), b.size()));
      for (int l = 0; l < shared; ++l) {
        if (a[static_cast<std::size_t>(l)] == b[static_cast<std::size_t>(l)]) {
          report.g2.push_back({l + 1, j1 + 1, j2 + 1, a[static_cast<std::size_t>(l)]});
        }
      }
      for (int l1 = 0; l1 < shared; ++l1) {
        for (int l2 = l1 + 1; l2 < shared; ++l2) {
          const Pencil sum_a = interaction(a[static_cast<std::size_t>(l1)],
                                           a[static_cast<std::size_t>(l2)]);
          const Pencil sum_b = interaction(b[static_cast<std::size_t>(l1)],
                                           b[static_cast<std::size_t>(l2)]);
          if (sum_a == sum_b) {
            report.g3.push_back({l1 + 1, l2 + 1, j1 + 1, j2 + 1, sum_a});
          }
        }
      }
    }
  }
  return report;
}

/// Outcome of the compliant-assignment search. Exhausting the node budget
/// or the search space is reported, not thrown: the guidelines cannot
/// always all be satisfied.
struct SearchResult {
  std::optional<GeneratorAssignment> assignment;
  std::uint64_t nodes_tried = 0;
  bool budget_exhausted = false;

  bool found() const { return assignment.has_value(); }
};

/// Backtracking search for a G1-G3 compliant assignment: rays in ascending
/// index, candidate generators from each ray's points in ascending effect
/// index (seed != 0 reshuffles each ray's candidate order reproducibly),
/// independence enforced incrementally and guideline violations pruned as
/// the partial assignment grows. Returns the first compliant assignment
/// found, or an empty result after exhausting the space or max_tries nodes.
inline SearchResult search_compliant(const Star& star, std::uint64_t seed = 0,
                                     std::uint64_t max_tries = 1'000'000) {
  const int mu = static_cast<int>(star.mu());
  SearchResult result;

  std::vector<std::vector<Pencil>> candidates;
  candidates.reserve(static_cast<std::size_t>(mu));
  for (const Flat& ray : star.rays()) {
    std::vector<Pencil> pool = ray.points();
    if (seed != 0) {
      SplitMix64 rng(derive_seed(seed, candidates.size(), 0));
      shuffle(pool, rng);
    }
    candidates.push_back(std::move(pool));
  }

  std::vector<std::vector<Pencil>> chosen(static_cast<std::size_t>(mu));
  // One echelon per ray tracks independence of the partial basis.
  std::vector<gf2::Echelon> bases(static_cast<std::size_t>(mu));

  const auto violates = [&](int j, int l, const Pencil& candidate) {
    if (l == 0 && star.nucleus().contains(candidate)) return true;  // G1
    for (int prev = 0; prev < j; ++prev) {
      const auto& other = chosen[static_cast<std::size_t>(prev)];
      if (l >= static_cast<int>(other.size())) continue;
      if (other[static_cast<std::size_t>(l)] == candidate) return true;  // G2
      for (int l1 = 0; l1 < l; ++l1) {
        const Pencil own_sum =
            interaction(chosen[static_cast<std::size_t>(j)][static_cast<std::size_t>(l1)],
                        candidate);
        const Pencil other_sum =
            interaction(other[static_cast<std::size_t>(l1)],
                        other[static_cast<std::size_t>(l)]);
        if (own_sum == other_sum) return true;  // G3
      }
    }
    return false;
  };

  const auto descend = [&](auto&& self, int j, int l) -> bool {
    if (j == mu) return true;
    const int rank = star.rays()[static_cast<std::size_t>(j)].rank();
    if (l == rank) return self(self, j + 1, 0);
    for (const Pencil& candidate : candidates[static_cast<std::size_t>(j)]) {
      if (result.nodes_tried >= max_tries) {
        result.budget_exhausted = true;
        return false;
      }
      result.nodes_tried += 1;
      if (bases[static_cast<std::size_t>(j)].contains(candidate.bits())) continue;
      if (violates(j, l, candidate)) continue;
      chosen[static_cast<std::size_t>(j)].push_back(candidate);
      gf2::Echelon saved = bases[static_cast<std::size_t>(j)];
      bases[static_cast<std::size_t>(j)].insert(candidate.bits());
      if (self(self, j, l + 1)) return true;
      if (result.budget_exhausted) return false;
      bases[static_cast<std::size_t>(j)] = std::move(saved);
      chosen[static_cast<std::size_t>(j)].pop_back();
    }
    return false;
  };

  if (descend(descend, 0, 0)) {
    result.assignment = GeneratorAssignment(chosen);
  }
  return result;
}

}  // namespace starlhd
