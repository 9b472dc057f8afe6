#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/lhd.hpp"
#include "starlhd/metrics.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/rng.hpp"
#include "starlhd/star.hpp"

namespace starlhd {

struct LabeledAssignment {
  std::string label;
  GeneratorAssignment assignment;
};

/// MID/AID samples over replicated expansions of one configuration.
struct SimulationResult {
  std::string label;
  std::vector<double> mid_samples;
  std::vector<double> aid_samples;
  std::uint64_t n_reps = 0;
  std::uint64_t seed = 0;
};

/// Replicated comparison of generator assignments on one star: each
/// configuration's array is built once, then n_reps times the level blocks
/// are re-permuted with a derived per-replicate seed and MID/AID are
/// computed on the midpoint (unperturbed) points. Only the block
/// permutations are randomized, isolating their effect on the distance
/// criteria. Each replicate draws from its own derived seed, so parallel
/// and serial execution agree.
inline std::vector<SimulationResult> run_simulation(
    const Star& star, const std::vector<LabeledAssignment>& configurations,
    std::uint64_t n_reps, std::uint64_t seed) {
  if (configurations.empty()) {
    throw std::invalid_argument("simulation needs at least one configuration");
  }
  if (n_reps < 1) {
    throw std::invalid_argument("simulation needs at least one replicate");
  }
  std::vector<SimulationResult> results;
  results.reserve(configurations.size());
  for (std::size_t c = 0; c < configurations.size(); ++c) {
    const DesignArray array = star_to_noa(star, configurations[c].assignment);
    SimulationResult result;
    result.label = configurations[c].label;
    result.n_reps = n_reps;
    result.seed = seed;
    result.mid_samples.reserve(n_reps);
    result.aid_samples.reserve(n_reps);
    for (std::uint64_t rep = 0; rep < n_reps; ++rep) {
      const LevelArray levels = expand(array, derive_seed(seed, c, rep));
      const Lhd design = perturb(levels, PerturbMode::midpoint, 0);
      result.mid_samples.push_back(mid(design));
      result.aid_samples.push_back(aid(design));
    }
    results.push_back(std::move(result));
  }
  return results;
}

/// Quartile summary of a sample (linear interpolation between order
/// statistics, the common "type 7" rule).
struct QuartileSummary {
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
};

inline double percentile(std::vector<double> samples, double fraction) {
  if (samples.empty()) {
    throw std::invalid_argument("percentile of an empty sample");
  }
  std::sort(samples.begin(), samples.end());
  const double h = fraction * static_cast<double>(samples.size() - 1);
  const auto lo = static_cast<std::size_t>(h);
  const std::size_t hi = std::min(lo + 1, samples.size() - 1);
  const double w = h - static_cast<double>(lo);
  return samples[lo] * (1.0 - w) + samples[hi] * w;
}

inline QuartileSummary quartiles(const std::vector<double>& samples) {
  return QuartileSummary{percentile(samples, 0.25), percentile(samples, 0.5),
                         percentile(samples, 0.75)};
}

}  // namespace starlhd
