#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace starlhd {

/// One divisibility requirement: n must be a multiple of the level product
/// over a column subset of size <= r.
struct DivisibilityCheck {
  std::vector<int> columns;  // 0-based
  std::uint64_t level_product = 1;
  bool passes = false;
};

/// Necessary conditions for the existence of an OA(n, s_1...s_d, r).
/// A failure proves non-existence; passing proves nothing.
struct ExistenceReport {
  int n = 0;
  std::vector<int> levels;
  int strength = 0;
  std::vector<DivisibilityCheck> divisibility_checks;
  bool divisibility_ok = false;
  std::uint64_t rao_lhs = 0;  // n - 1
  std::uint64_t rao_rhs = 0;  // sum of (s_j - 1)
  bool rao_ok = false;
  bool all_necessary_hold = false;
};

inline ExistenceReport existence_preconditions(int n, const std::vector<int>& levels,
                                               int r) {
  if (n < 1) throw std::invalid_argument("run count n must be positive");
  if (levels.empty()) throw std::invalid_argument("level list must not be empty");
  for (int s : levels) {
    if (s < 1) throw std::invalid_argument("level counts must be positive");
  }
  const int d = static_cast<int>(levels.size());
  if (r < 1 || r > d) {
    throw std::invalid_argument("strength r must lie in [1, d]");
  }

  ExistenceReport report;
  report.n = n;
  report.levels = levels;
  report.strength = r;
  report.divisibility_ok = true;

  // Every nonempty column subset of size <= r contributes one requirement.
  std::vector<int> subset;
  const auto descend = [&](auto&& self, int next) -> void {
    if (!subset.empty()) {
      DivisibilityCheck check;
      check.columns = subset;
      for (int j : subset) {
        check.level_product *= static_cast<std::uint64_t>(levels[static_cast<std::size_t>(j)]);
      }
      check.passes = static_cast<std::uint64_t>(n) % check.level_product == 0;
      if (!check.passes) report.divisibility_ok = false;
      report.divisibility_checks.push_back(std::move(check));
    }
    if (static_cast<int>(subset.size()) == r) return;
    for (int j = next; j < d; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  descend(descend, 0);

  report.rao_lhs = static_cast<std::uint64_t>(n) - 1;
  report.rao_rhs = 0;
  for (int s : levels) report.rao_rhs += static_cast<std::uint64_t>(s) - 1;
  report.rao_ok = report.rao_lhs >= report.rao_rhs;

  report.all_necessary_hold = report.divisibility_ok && report.rao_ok;
  return report;
}

}  // namespace starlhd
