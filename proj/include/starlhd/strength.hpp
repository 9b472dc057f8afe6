#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/design_array.hpp"

namespace starlhd {

/// A reduced nonnegative rational. den == 0 marks "undefined".
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  static Fraction reduced(std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g = std::gcd(num, den);
    return g ? Fraction{num / g, den / g} : Fraction{num, den};
  }

  bool defined() const { return den != 0; }
  friend bool operator==(const Fraction& a, const Fraction& b) = default;
};

/// Tuple-count census for one column subset. `count_histogram` maps a tuple
/// count to the number of level combinations realizing it, covering all
/// `cell_count` combinations (absent ones under key 0).
struct SubsetStrength {
  std::vector<int> columns;  // 0-based, ascending
  std::uint64_t cell_count = 0;
  std::map<std::uint64_t, std::uint64_t> count_histogram;
  std::uint64_t present_cells = 0;
  bool uniform_counts = false;  // all nonzero counts equal
  Fraction present_fraction;    // present_cells / cell_count
  bool exact = false;           // every combination appears n / cell_count times
  std::uint64_t deficiency = 0; // cells whose count differs from n / cell_count
};

/// Exhaustive strength-r census over every r-subset of columns. The counts
/// themselves are the oracle: no algebraic shortcuts.
struct StrengthReport {
  int strength = 0;
  bool is_exact_strength_r = false;
  std::uint64_t deficiency = 0;
  /// When every subset realizes a constant nonzero count on the same
  /// fraction of its level combinations, that common fraction (1/1 for an
  /// exact OA); undefined otherwise. Star-derived arrays with nucleus rank
  /// t-1 show fraction 2^-(t-1) here.
  Fraction fraction_factor;
  std::vector<SubsetStrength> subsets;
};

inline StrengthReport verify_strength(const DesignArray& arr, int r) {
  const int d = static_cast<int>(arr.n_factors());
  if (r < 1 || r > d) {
    throw std::invalid_argument("strength r = " + std::to_string(r) +
                                " must lie in [1, d = " + std::to_string(d) + "]");
  }
  const std::uint64_t n = arr.n_runs();

  StrengthReport report;
  report.strength = r;
  report.is_exact_strength_r = true;
  bool common_fraction_defined = true;
  Fraction common_fraction;

  std::vector<int> columns(static_cast<std::size_t>(r));
  std::iota(columns.begin(), columns.end(), 0);
  for (;;) {
    SubsetStrength subset;
    subset.columns = columns;
    subset.cell_count = 1;
    std::vector<std::uint64_t> strides(columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
      strides[k] = subset.cell_count;
      subset.cell_count *= static_cast<std::uint64_t>(
          arr.level_counts()[static_cast<std::size_t>(columns[k])]);
    }

    std::vector<std::uint64_t> counts(subset.cell_count, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t cell = 0;
      for (std::size_t k = 0; k < columns.size(); ++k) {
        cell += strides[k] * static_cast<std::uint64_t>(
                                 arr.values()[i][static_cast<std::size_t>(columns[k])]);
      }
      counts[cell] += 1;
    }

    std::uint64_t nonzero_value = 0;
    subset.uniform_counts = true;
    for (std::uint64_t c : counts) {
      subset.count_histogram[c] += 1;
      if (c != 0) {
        subset.present_cells += 1;
        if (nonzero_value == 0) {
          nonzero_value = c;
        } else if (c != nonzero_value) {
          subset.uniform_counts = false;
        }
      }
      // Exact comparison against the rational n / cell_count.
      if (c * subset.cell_count != n) subset.deficiency += 1;
    }
    subset.present_fraction =
        Fraction::reduced(subset.present_cells, subset.cell_count);
    subset.exact = subset.deficiency == 0;

    report.deficiency += subset.deficiency;
    if (!subset.exact) report.is_exact_strength_r = false;
    if (subset.uniform_counts && subset.present_cells > 0) {
      if (!common_fraction.defined()) {
        common_fraction = subset.present_fraction;
      } else if (!(common_fraction == subset.present_fraction)) {
        common_fraction_defined = false;
      }
    } else {
      common_fraction_defined = false;
    }
    report.subsets.push_back(std::move(subset));

    // Next r-combination in lexicographic order.
    int k = r - 1;
    while (k >= 0 && columns[static_cast<std::size_t>(k)] == d - r + k) --k;
    if (k < 0) break;
    columns[static_cast<std::size_t>(k)] += 1;
    for (int m = k + 1; m < r; ++m) {
      columns[static_cast<std::size_t>(m)] = columns[static_cast<std::size_t>(m - 1)] + 1;
    }
  }

  if (common_fraction_defined && common_fraction.defined()) {
    report.fraction_factor = common_fraction;
  }
  return report;
}

}  // namespace starlhd
