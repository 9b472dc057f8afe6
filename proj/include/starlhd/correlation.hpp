#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/design_array.hpp"

namespace starlhd {

/// Near-orthogonality score: the average squared Pearson correlation over
/// all column pairs, scoring levels as the equally spaced integers
/// 0, ..., s_j - 1. Exact strength-2 arrays score 0; larger means less
/// orthogonal. Columns with zero variance are rejected.
inline double near_orthogonality_score(const DesignArray& arr) {
  const std::size_t d = arr.n_factors();
  if (d < 2) {
    throw std::invalid_argument("near-orthogonality needs at least two columns");
  }
  const std::size_t n = arr.n_runs();

  std::vector<std::vector<double>> centered(d, std::vector<double>(n));
  std::vector<double> norms(d);
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += arr.values()[i][j];
    mean /= static_cast<double>(n);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      centered[j][i] = static_cast<double>(arr.values()[i][j]) - mean;
      sq += centered[j][i] * centered[j][i];
    }
    if (sq == 0.0) {
      throw std::invalid_argument("column " + std::to_string(j + 1) +
                                  " is constant; correlation is undefined");
    }
    norms[j] = std::sqrt(sq);
  }

  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      double cross = 0.0;
      for (std::size_t i = 0; i < n; ++i) cross += centered[a][i] * centered[b][i];
      const double rho = cross / (norms[a] * norms[b]);
      total += rho * rho;
      ++pairs;
    }
  }
  return total / static_cast<double>(pairs);
}

}  // namespace starlhd
