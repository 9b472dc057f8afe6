#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace starlhd {

/// Largest supported number of base factors. Keeps every effect in a single
/// 32-bit word and bounds the built-in primitive polynomial table.
inline constexpr int kMaxFactors = 16;

namespace detail {
inline void check_factor_count(int p) {
  if (p < 1 || p > kMaxFactors) {
    throw std::invalid_argument("factor count p must be in [1, " +
                                std::to_string(kMaxFactors) + "], got " +
                                std::to_string(p));
  }
}
}  // namespace detail

/// A pencil: one nonzero p-bit vector over GF(2) naming a factorial effect,
/// i.e. a point of the projective geometry PG(p-1, 2). Bit p-1 is the first
/// base factor "A" and bit 0 the last, so the integer value of the bit
/// pattern doubles as the effect index in the canonical ordering
/// (D, C, CD, B, ... for p = 4).
class Pencil {
 public:
  Pencil(std::uint32_t bits, int p) : bits_(bits), p_(p) {
    detail::check_factor_count(p);
    if (bits == 0) {
      throw std::invalid_argument("pencil bits must be nonzero (the grand mean is not a pencil)");
    }
    if (bits >> p) {
      throw std::out_of_range("pencil bits exceed 2^p - 1");
    }
  }

  /// The pencil with index i in the canonical effect ordering, 1 <= i <= 2^p - 1.
  static Pencil from_index(std::uint32_t index, int p) {
    detail::check_factor_count(p);
    if (index < 1 || index >= (1u << p)) {
      throw std::out_of_range("pencil index " + std::to_string(index) +
                              " out of range [1, 2^p - 1] for p = " +
                              std::to_string(p));
    }
    return Pencil(index, p);
  }

  /// Parses an uppercase letter label such as "ACD" (A = first base factor).
  static Pencil from_label(std::string_view label, int p) {
    detail::check_factor_count(p);
    if (label.empty()) {
      throw std::invalid_argument("pencil label must not be empty");
    }
    std::uint32_t bits = 0;
    for (char ch : label) {
      if (ch < 'A' || ch >= static_cast<char>('A' + p)) {
        throw std::invalid_argument("invalid factor letter '" + std::string(1, ch) +
                                    "' in pencil label for p = " + std::to_string(p));
      }
      const std::uint32_t bit = 1u << (p - 1 - (ch - 'A'));
      if (bits & bit) {
        throw std::invalid_argument("repeated factor letter in pencil label: " +
                                    std::string(label));
      }
      bits |= bit;
    }
    return Pencil(bits, p);
  }

  std::uint32_t bits() const { return bits_; }
  std::uint32_t index() const { return bits_; }
  int p() const { return p_; }

  std::string label() const {
    std::string out;
    for (int b = p_ - 1; b >= 0; --b) {
      if (bits_ & (1u << b)) out.push_back(static_cast<char>('A' + (p_ - 1 - b)));
    }
    return out;
  }

  friend bool operator==(const Pencil& a, const Pencil& b) = default;

  /// Orders by effect index within one geometry.
  friend bool operator<(const Pencil& a, const Pencil& b) {
    return a.index() < b.index();
  }

 private:
  std::uint32_t bits_;
  int p_;
};

namespace detail {
inline void check_same_geometry(const Pencil& a, const Pencil& b) {
  if (a.p() != b.p()) {
    throw std::invalid_argument("pencils belong to different geometries (p = " +
                                std::to_string(a.p()) + " vs " +
                                std::to_string(b.p()) + ")");
  }
}
}  // namespace detail

/// Inner product over GF(2): the parity of the AND of the two bit vectors.
inline int dot(const Pencil& a, const Pencil& b) {
  detail::check_same_geometry(a, b);
  return std::popcount(a.bits() & b.bits()) & 1;
}

/// The interaction (GF(2) sum) of two distinct effects, e.g. B * ACD = ABCD.
inline Pencil interaction(const Pencil& a, const Pencil& b) {
  detail::check_same_geometry(a, b);
  if (a == b) {
    throw std::invalid_argument("interaction of an effect with itself is the grand mean");
  }
  return Pencil(a.bits() ^ b.bits(), a.p());
}

}  // namespace starlhd
