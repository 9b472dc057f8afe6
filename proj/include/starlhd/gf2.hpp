#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace starlhd::gf2 {

/// Incremental reduced row echelon basis over GF(2). Rows are bit masks;
/// pivots are the highest set bits and each pivot appears in exactly one row.
class Echelon {
 public:
  /// Reduces v by the current basis. Returns 0 iff v lies in the span.
  std::uint32_t reduce(std::uint32_t v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (v & pivot_bit_[k]) v ^= rows_[k];
    }
    return v;
  }

  bool contains(std::uint32_t v) const { return reduce(v) == 0; }

  /// Inserts v if independent of the basis; returns false when dependent.
  bool insert(std::uint32_t v) {
    v = reduce(v);
    if (v == 0) return false;
    const std::uint32_t pivot = high_bit(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (rows_[k] & pivot) rows_[k] ^= v;
    }
    rows_.push_back(v);
    pivot_bit_.push_back(pivot);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Pivot bit positions, one per basis row.
  std::vector<int> pivot_positions() const {
    std::vector<int> out;
    out.reserve(pivot_bit_.size());
    for (std::uint32_t bit : pivot_bit_) {
      int pos = 0;
      while ((bit >> pos) != 1u) ++pos;
      out.push_back(pos);
    }
    return out;
  }

 private:
  static std::uint32_t high_bit(std::uint32_t v) {
    std::uint32_t bit = 1;
    while (v >>= 1) bit <<= 1;
    return bit;
  }

  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> pivot_bit_;
};

inline int rank(const std::vector<std::uint32_t>& vectors) {
  Echelon e;
  for (std::uint32_t v : vectors) e.insert(v);
  return e.rank();
}

inline bool independent(const std::vector<std::uint32_t>& vectors) {
  Echelon e;
  for (std::uint32_t v : vectors) {
    if (!e.insert(v)) return false;
  }
  return true;
}

/// All 2^t - 1 nonzero GF(2) combinations of t independent basis masks,
/// sorted ascending.
inline std::vector<std::uint32_t> span_points(
    const std::vector<std::uint32_t>& basis) {
  const std::size_t t = basis.size();
  std::vector<std::uint32_t> out;
  out.reserve((1u << t) - 1);
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    std::uint32_t v = 0;
    for (std::size_t l = 0; l < t; ++l) {
      if (mask & (1u << l)) v ^= basis[l];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace starlhd::gf2
