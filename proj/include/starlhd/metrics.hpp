#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/lhd.hpp"
#include "starlhd/types.hpp"

namespace starlhd {

namespace detail {
inline std::vector<int> resolve_columns(const RealMatrix& points,
                                        const std::vector<int>& columns) {
  if (points.empty()) throw std::invalid_argument("design has no points");
  const int d = static_cast<int>(points.front().size());
  if (columns.empty()) {
    std::vector<int> all(static_cast<std::size_t>(d));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  for (int c : columns) {
    if (c < 0 || c >= d) {
      throw std::invalid_argument("projection column " + std::to_string(c) +
                                  " out of range");
    }
  }
  return columns;
}

inline double pair_distance(const RealMatrix& points, std::size_t i, std::size_t j,
                            const std::vector<int>& columns) {
  double sq = 0.0;
  for (int c : columns) {
    const double delta = points[i][static_cast<std::size_t>(c)] -
                         points[j][static_cast<std::size_t>(c)];
    sq += delta * delta;
  }
  return std::sqrt(sq);
}
}  // namespace detail

/// Minimum interpoint Euclidean distance over all row pairs, restricted to
/// the given columns (all columns when the list is empty). Larger is more
/// space-filling in the worst-case sense.
inline double mid(const RealMatrix& points, const std::vector<int>& columns = {}) {
  if (points.size() < 2) {
    throw std::invalid_argument("interpoint distance needs at least two points");
  }
  const std::vector<int> cols = detail::resolve_columns(points, columns);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double dist = detail::pair_distance(points, i, j, cols);
      if (dist < best) best = dist;
    }
  }
  return best;
}

/// Average interpoint Euclidean distance over all n(n-1)/2 row pairs.
/// Accumulation order is fixed (i < j, ascending), so results are exactly
/// reproducible regardless of how callers partition the work.
inline double aid(const RealMatrix& points, const std::vector<int>& columns = {}) {
  if (points.size() < 2) {
    throw std::invalid_argument("interpoint distance needs at least two points");
  }
  const std::vector<int> cols = detail::resolve_columns(points, columns);
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      total += detail::pair_distance(points, i, j, cols);
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

inline double mid(const Lhd& design, const std::vector<int>& columns = {}) {
  return mid(design.points(), columns);
}
inline double aid(const Lhd& design, const std::vector<int>& columns = {}) {
  return aid(design.points(), columns);
}

/// Distance summary for one column subset of a design.
struct DistanceSummary {
  std::vector<int> columns;  // 0-based, ascending; empty never appears
  std::size_t n_points = 0;
  double mid = 0.0;
  double aid = 0.0;
};

inline DistanceSummary distance_summary(const RealMatrix& points,
                                        std::vector<int> columns) {
  DistanceSummary summary;
  summary.n_points = points.size();
  summary.mid = mid(points, columns);
  summary.aid = aid(points, columns);
  summary.columns = detail::resolve_columns(points, columns);
  return summary;
}

/// One DistanceSummary per k-subset of columns, subsets in lexicographic
/// order. k = d reduces to the full-design summary.
inline std::vector<DistanceSummary> projection_summary(const RealMatrix& points,
                                                       int k) {
  if (points.empty()) throw std::invalid_argument("design has no points");
  const int d = static_cast<int>(points.front().size());
  if (k < 1 || k > d) {
    throw std::invalid_argument("projection size k must lie in [1, d]");
  }
  std::vector<DistanceSummary> out;
  std::vector<int> columns(static_cast<std::size_t>(k));
  std::iota(columns.begin(), columns.end(), 0);
  for (;;) {
    out.push_back(distance_summary(points, columns));
    int i = k - 1;
    while (i >= 0 && columns[static_cast<std::size_t>(i)] == d - k + i) --i;
    if (i < 0) break;
    columns[static_cast<std::size_t>(i)] += 1;
    for (int m = i + 1; m < k; ++m) {
      columns[static_cast<std::size_t>(m)] = columns[static_cast<std::size_t>(m - 1)] + 1;
    }
  }
  return out;
}

inline std::vector<DistanceSummary> projection_summary(const Lhd& design, int k) {
  return projection_summary(design.points(), k);
}

}  // namespace starlhd
