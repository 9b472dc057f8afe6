#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/types.hpp"

namespace starlhd {

enum class ArrayKind { exact_oa, noa };

inline std::string to_string(ArrayKind kind) {
  return kind == ArrayKind::exact_oa ? "exact-OA" : "NOA";
}

inline ArrayKind array_kind_from_string(const std::string& text) {
  if (text == "exact-OA") return ArrayKind::exact_oa;
  if (text == "NOA") return ArrayKind::noa;
  throw std::invalid_argument("unknown array kind: " + text);
}

/// An n x d design array with s_j levels {0, ..., s_j - 1} in column j.
/// Every column is balanced: each level appears exactly n / s_j times.
/// strength_claim records the strength the construction promises (0 when
/// nothing is claimed); verify_strength checks claims against the data.
class DesignArray {
 public:
  DesignArray(IntMatrix values, std::vector<int> level_counts,
              int strength_claim, ArrayKind kind)
      : values_(std::move(values)),
        level_counts_(std::move(level_counts)),
        strength_claim_(strength_claim),
        kind_(kind) {
    if (values_.empty() || level_counts_.empty()) {
      throw std::invalid_argument("design array must have at least one run and one factor");
    }
    const std::size_t n = values_.size();
    const std::size_t d = level_counts_.size();
    for (const auto& row : values_) {
      if (row.size() != d) {
        throw std::invalid_argument("design array rows must all have d entries");
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      const int s = level_counts_[j];
      if (s < 1) {
        throw std::invalid_argument("level count must be positive in column " +
                                    std::to_string(j + 1));
      }
      if (n % static_cast<std::size_t>(s) != 0) {
        throw std::invalid_argument("run count " + std::to_string(n) +
                                    " is not a multiple of s_" + std::to_string(j + 1) +
                                    " = " + std::to_string(s));
      }
      std::vector<std::size_t> tally(static_cast<std::size_t>(s), 0);
      for (std::size_t i = 0; i < n; ++i) {
        const int v = values_[i][j];
        if (v < 0 || v >= s) {
          throw std::invalid_argument("entry at run " + std::to_string(i + 1) +
                                      ", column " + std::to_string(j + 1) +
                                      " is outside [0, s_j)");
        }
        tally[static_cast<std::size_t>(v)] += 1;
      }
      const std::size_t per_level = n / static_cast<std::size_t>(s);
      for (int level = 0; level < s; ++level) {
        if (tally[static_cast<std::size_t>(level)] != per_level) {
          throw std::invalid_argument("column " + std::to_string(j + 1) +
                                      " is unbalanced at level " + std::to_string(level));
        }
      }
    }
  }

  std::size_t n_runs() const { return values_.size(); }
  std::size_t n_factors() const { return level_counts_.size(); }
  const IntMatrix& values() const { return values_; }
  const std::vector<int>& level_counts() const { return level_counts_; }
  int strength_claim() const { return strength_claim_; }
  ArrayKind kind() const { return kind_; }

  int at(std::size_t run, std::size_t factor) const {
    return values_.at(run).at(factor);
  }

  std::vector<int> column(std::size_t factor) const {
    std::vector<int> out;
    out.reserve(n_runs());
    for (const auto& row : values_) out.push_back(row.at(factor));
    return out;
  }

 private:
  IntMatrix values_;
  std::vector<int> level_counts_;
  int strength_claim_;
  ArrayKind kind_;
};

}  // namespace starlhd
