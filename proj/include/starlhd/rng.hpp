#pragma once

#include <cstdint>
#include <vector>

namespace starlhd {

/// SplitMix64 stream. Small, seedable and portable: the same seed yields the
/// same sequence on every platform, which keeps design construction and the
/// frozen test vectors reproducible across languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from the open interval (0, 1). The endpoints are excluded
  /// so that a perturbed Latin hypercube point never lands on a cell
  /// boundary.
  double next_open_unit() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased draw from {0, ..., bound-1} by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

/// Derives an independent substream seed from a master seed and two stream
/// tags. Used to give every (column, level) block its own stream so that
/// serial and parallel expansion produce identical output.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b) {
  std::uint64_t h = detail::mix64(master + 0x9E3779B97F4A7C15ull);
  h = detail::mix64(h + a);
  h = detail::mix64(h + b);
  return h;
}

/// In-place Fisher-Yates shuffle driven by the given stream.
template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace starlhd
