#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/design_array.hpp"
#include "starlhd/rng.hpp"
#include "starlhd/types.hpp"

namespace starlhd {

namespace detail {
inline void check_latin_columns(const IntMatrix& values) {
  const std::size_t n = values.size();
  if (n == 0 || values.front().empty()) {
    throw std::invalid_argument("level array must have at least one run and one column");
  }
  const std::size_t d = values.front().size();
  for (const auto& row : values) {
    if (row.size() != d) {
      throw std::invalid_argument("level array rows must all have d entries");
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
      const int v = values[i][j];
      if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("column " + std::to_string(j + 1) +
                                    " is not a permutation of 1..n");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
}
}  // namespace detail

/// Intermediate array of Tang's two-step construction: each column is a
/// permutation of {1, ..., n} obtained by spreading the runs of each source
/// level across that level's block of n/s_j consecutive ranks. Carries the
/// source level counts and expansion seed as provenance.
class LevelArray {
 public:
  LevelArray(IntMatrix values, std::vector<int> source_levels, std::uint64_t seed)
      : values_(std::move(values)),
        source_levels_(std::move(source_levels)),
        seed_(seed) {
    detail::check_latin_columns(values_);
    if (source_levels_.size() != values_.front().size()) {
      throw std::invalid_argument("source level list does not match column count");
    }
  }

  std::size_t n_runs() const { return values_.size(); }
  std::size_t n_factors() const { return values_.front().size(); }
  const IntMatrix& values() const { return values_; }
  const std::vector<int>& source_levels() const { return source_levels_; }
  std::uint64_t seed() const { return seed_; }

 private:
  IntMatrix values_;
  std::vector<int> source_levels_;
  std::uint64_t seed_;
};

enum class PerturbMode { uniform, midpoint };

inline std::string to_string(PerturbMode mode) {
  return mode == PerturbMode::uniform ? "uniform" : "midpoint";
}

inline PerturbMode perturb_mode_from_string(const std::string& text) {
  if (text == "uniform") return PerturbMode::uniform;
  if (text == "midpoint") return PerturbMode::midpoint;
  throw std::invalid_argument("unknown perturbation mode: " + text);
}

/// A Latin hypercube design: n points in [0,1)^d with exactly one point per
/// axis-aligned slab of width 1/n in every coordinate.
class Lhd {
 public:
  Lhd(RealMatrix points, PerturbMode mode, std::uint64_t seed)
      : points_(std::move(points)), mode_(mode), seed_(seed) {
    const std::size_t n = points_.size();
    if (n == 0 || points_.front().empty()) {
      throw std::invalid_argument("design must have at least one point and one column");
    }
    const std::size_t d = points_.front().size();
    for (const auto& row : points_) {
      if (row.size() != d) {
        throw std::invalid_argument("design rows must all have d coordinates");
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<bool> cell_used(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        const double v = points_[i][j];
        if (!(v >= 0.0 && v < 1.0)) {
          throw std::invalid_argument("coordinate outside [0,1) at point " +
                                      std::to_string(i + 1));
        }
        auto cell = static_cast<std::size_t>(v * static_cast<double>(n));
        if (cell >= n) cell = n - 1;
        if (cell_used[cell]) {
          throw std::invalid_argument("two points share cell " + std::to_string(cell + 1) +
                                      " in column " + std::to_string(j + 1));
        }
        cell_used[cell] = true;
      }
    }
  }

  std::size_t n_runs() const { return points_.size(); }
  std::size_t n_factors() const { return points_.front().size(); }
  const RealMatrix& points() const { return points_; }
  PerturbMode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }

 private:
  RealMatrix points_;
  PerturbMode mode_;
  std::uint64_t seed_;
};

/// First step of Tang's construction: per column j and level k, the n/s_j
/// runs holding k are replaced by a seeded random permutation of the rank
/// block {k n/s_j + 1, ..., (k+1) n/s_j}. Each (column, level) block draws
/// from its own derived substream, so the result is independent of
/// evaluation order.
inline LevelArray expand(const DesignArray& arr, std::uint64_t seed) {
  const std::size_t n = arr.n_runs();
  const std::size_t d = arr.n_factors();
  IntMatrix values(n, std::vector<int>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    const int s = arr.level_counts()[j];
    const std::size_t block = n / static_cast<std::size_t>(s);
    for (int level = 0; level < s; ++level) {
      std::vector<int> ranks(block);
      std::iota(ranks.begin(), ranks.end(),
                static_cast<int>(static_cast<std::size_t>(level) * block) + 1);
      SplitMix64 rng(derive_seed(seed, j, static_cast<std::uint64_t>(level)));
      shuffle(ranks, rng);
      std::size_t used = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (arr.values()[i][j] == level) values[i][j] = ranks[used++];
      }
    }
  }
  return LevelArray(std::move(values), arr.level_counts(), seed);
}

/// Second step: point i, column j becomes (rank - u) / n with u drawn
/// uniformly from (0, 1) per entry, or u = 0.5 in midpoint mode (a
/// deterministic variant that centers every point in its cell).
inline Lhd perturb(const LevelArray& levels, PerturbMode mode, std::uint64_t seed) {
  const std::size_t n = levels.n_runs();
  const std::size_t d = levels.n_factors();
  RealMatrix points(n, std::vector<double>(d, 0.0));
  for (std::size_t j = 0; j < d; ++j) {
    SplitMix64 rng(derive_seed(seed, j, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const double u = mode == PerturbMode::uniform ? rng.next_open_unit() : 0.5;
      points[i][j] = (static_cast<double>(levels.values()[i][j]) - u) /
                     static_cast<double>(n);
    }
  }
  return Lhd(std::move(points), mode, seed);
}

/// Cell indices implied by a level array: entry (i, j) is
/// (rank - 1) / (n / s_j). Expansion is lossless, so this recovers the
/// source design array exactly.
inline IntMatrix stratify(const LevelArray& levels) {
  const std::size_t n = levels.n_runs();
  const std::size_t d = levels.n_factors();
  IntMatrix cells(n, std::vector<int>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    const std::size_t block =
        n / static_cast<std::size_t>(levels.source_levels()[j]);
    for (std::size_t i = 0; i < n; ++i) {
      cells[i][j] = static_cast<int>(
          (static_cast<std::size_t>(levels.values()[i][j]) - 1) / block);
    }
  }
  return cells;
}

/// Unstructured Latin hypercube levels: every column an independent seeded
/// permutation of {1, ..., n}.
inline LevelArray random_level_array(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("random design needs n >= 1 and d >= 1");
  }
  IntMatrix values(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(d), 0));
  for (int j = 0; j < d; ++j) {
    std::vector<int> ranks(static_cast<std::size_t>(n));
    std::iota(ranks.begin(), ranks.end(), 1);
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(j), 0));
    shuffle(ranks, rng);
    for (int i = 0; i < n; ++i) {
      values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          ranks[static_cast<std::size_t>(i)];
    }
  }
  return LevelArray(std::move(values), std::vector<int>(static_cast<std::size_t>(d), 1),
                    seed);
}

/// A plain random Latin hypercube design: independent column permutations
/// plus uniform perturbation, both derived from one seed.
inline Lhd random_lhd(int n, int d, std::uint64_t seed) {
  const LevelArray levels = random_level_array(n, d, derive_seed(seed, 1, 0));
  return perturb(levels, PerturbMode::uniform, derive_seed(seed, 2, 0));
}

}  // namespace starlhd
