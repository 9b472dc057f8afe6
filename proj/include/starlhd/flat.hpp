#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/gf2.hpp"
#include "starlhd/pencil.hpp"

namespace starlhd {

/// A flat of PG(p-1, 2): the rank-t subspace spanned by t linearly
/// independent pencils, held as the ordered generator list plus the full set
/// of 2^t - 1 points (sorted by effect index). Rank 0 is the empty flat.
/// Immutable after construction.
class Flat {
 public:
  static Flat empty(int p) {
    detail::check_factor_count(p);
    return Flat(p, {}, {});
  }

  /// Builds the flat spanned by an ordered, linearly independent generator
  /// list. Dependent lists are rejected rather than silently reduced.
  static Flat spanned_by(const std::vector<Pencil>& generators) {
    if (generators.empty()) {
      throw std::invalid_argument("span requires at least one generator");
    }
    const int p = generators.front().p();
    std::vector<std::uint32_t> basis;
    gf2::Echelon echelon;
    basis.reserve(generators.size());
    for (const Pencil& g : generators) {
      if (g.p() != p) {
        throw std::invalid_argument("span generators belong to different geometries");
      }
      if (!echelon.insert(g.bits())) {
        throw std::invalid_argument("generator " + g.label() +
                                    " is linearly dependent on earlier generators");
      }
      basis.push_back(g.bits());
    }
    std::vector<Pencil> points;
    for (std::uint32_t v : gf2::span_points(basis)) points.emplace_back(v, p);
    return Flat(p, generators, std::move(points));
  }

  /// Reconstructs a flat from its full point set, extracting the
  /// smallest-index generator basis. Throws if the points do not form the
  /// nonzero part of a subspace.
  static Flat from_points(const std::vector<Pencil>& points, int p) {
    detail::check_factor_count(p);
    if (points.empty()) return empty(p);
    gf2::Echelon echelon;
    std::vector<Pencil> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Pencil> generators;
    for (const Pencil& pt : sorted) {
      if (pt.p() != p) {
        throw std::invalid_argument("flat points belong to different geometries");
      }
      if (echelon.insert(pt.bits())) generators.push_back(pt);
    }
    if (sorted.size() != (std::size_t{1} << generators.size()) - 1) {
      throw std::invalid_argument("point set is not a subspace of PG(p-1,2)");
    }
    return Flat(p, std::move(generators), std::move(sorted));
  }

  int p() const { return p_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<Pencil>& generators() const { return generators_; }

  /// All 2^rank - 1 points, ascending by effect index.
  const std::vector<Pencil>& points() const { return points_; }

  /// Point indices, ascending. Convenient for set algebra.
  std::vector<std::uint32_t> point_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(points_.size());
    for (const Pencil& pt : points_) out.push_back(pt.index());
    return out;
  }

  bool contains(const Pencil& pt) const {
    return pt.p() == p_ &&
           std::binary_search(points_.begin(), points_.end(), pt);
  }

  bool contains_all(const Flat& other) const {
    if (other.p() != p_) return false;
    return std::includes(points_.begin(), points_.end(), other.points_.begin(),
                         other.points_.end());
  }

  /// Flats are equal when they are the same point set, whatever the basis.
  friend bool operator==(const Flat& a, const Flat& b) {
    return a.p_ == b.p_ && a.points_ == b.points_;
  }

 private:
  Flat(int p, std::vector<Pencil> generators, std::vector<Pencil> points)
      : p_(p), generators_(std::move(generators)), points_(std::move(points)) {}

  int p_;
  std::vector<Pencil> generators_;
  std::vector<Pencil> points_;
};

inline Flat span(const std::vector<Pencil>& generators) {
  return Flat::spanned_by(generators);
}

/// Convenience: span from labels, e.g. span_labels(4, {"A", "B", "ACD"}).
inline Flat span_labels(int p, const std::vector<std::string>& labels) {
  std::vector<Pencil> generators;
  generators.reserve(labels.size());
  for (const std::string& label : labels) generators.push_back(Pencil::from_label(label, p));
  return span(generators);
}

/// Intersection of two flats as a flat (possibly empty).
inline Flat intersect(const Flat& a, const Flat& b) {
  if (a.p() != b.p()) {
    throw std::invalid_argument("cannot intersect flats of different geometries");
  }
  std::vector<Pencil> common;
  std::set_intersection(a.points().begin(), a.points().end(),
                        b.points().begin(), b.points().end(),
                        std::back_inserter(common));
  return Flat::from_points(common, a.p());
}

}  // namespace starlhd
