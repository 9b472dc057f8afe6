#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlhd/design_array.hpp"
#include "starlhd/flat.hpp"
#include "starlhd/pencil.hpp"
#include "starlhd/star.hpp"

namespace starlhd {

/// Ordered generator lists, one per ray of a star: the randomization
/// restriction factors delta_1^(j), ..., delta_tj^(j) whose choice fixes the
/// level labeling of column j in the derived array. Interpreted relative to
/// a star; validate_assignment checks that each list spans its ray.
class GeneratorAssignment {
 public:
  explicit GeneratorAssignment(std::vector<std::vector<Pencil>> per_ray)
      : per_ray_(std::move(per_ray)) {
    if (per_ray_.empty()) {
      throw std::invalid_argument("generator assignment must cover at least one ray");
    }
    for (const auto& generators : per_ray_) {
      if (generators.empty()) {
        throw std::invalid_argument("each ray needs at least one generator");
      }
      for (const Pencil& g : generators) {
        if (g.p() != per_ray_.front().front().p()) {
          throw std::invalid_argument("assignment generators belong to different geometries");
        }
      }
    }
  }

  static GeneratorAssignment from_labels(
      int p, const std::vector<std::vector<std::string>>& labels) {
    std::vector<std::vector<Pencil>> per_ray;
    per_ray.reserve(labels.size());
    for (const auto& ray_labels : labels) {
      std::vector<Pencil> generators;
      generators.reserve(ray_labels.size());
      for (const std::string& label : ray_labels) {
        generators.push_back(Pencil::from_label(label, p));
      }
      per_ray.push_back(std::move(generators));
    }
    return GeneratorAssignment(std::move(per_ray));
  }

  const std::vector<std::vector<Pencil>>& per_ray() const { return per_ray_; }
  std::size_t ray_count() const { return per_ray_.size(); }
  int p() const { return per_ray_.front().front().p(); }

  std::vector<std::vector<std::string>> labels() const {
    std::vector<std::vector<std::string>> out;
    out.reserve(per_ray_.size());
    for (const auto& generators : per_ray_) {
      std::vector<std::string> ray_labels;
      ray_labels.reserve(generators.size());
      for (const Pencil& g : generators) ray_labels.push_back(g.label());
      out.push_back(std::move(ray_labels));
    }
    return out;
  }

 private:
  std::vector<std::vector<Pencil>> per_ray_;
};

/// Throws unless the assignment matches the star ray for ray: exactly t_j
/// independent generators whose span is R_j.
inline void validate_assignment(const Star& star, const GeneratorAssignment& gens) {
  if (gens.ray_count() != star.mu()) {
    throw std::invalid_argument("assignment covers " + std::to_string(gens.ray_count()) +
                                " rays but the star has " + std::to_string(star.mu()));
  }
  if (gens.p() != star.p()) {
    throw std::invalid_argument("assignment geometry does not match the star");
  }
  for (std::size_t j = 0; j < star.mu(); ++j) {
    const Flat& ray = star.rays()[j];
    const auto& generators = gens.per_ray()[j];
    if (static_cast<int>(generators.size()) != ray.rank()) {
      throw std::invalid_argument("ray " + std::to_string(j + 1) + " needs exactly " +
                                  std::to_string(ray.rank()) + " generators");
    }
    if (!(span(generators) == ray)) {
      throw std::invalid_argument("generators of ray " + std::to_string(j + 1) +
                                  " do not span that ray");
    }
  }
}

/// The generator lists the star's rays were built with.
inline GeneratorAssignment canonical_assignment(const Star& star) {
  std::vector<std::vector<Pencil>> per_ray;
  per_ray.reserve(star.mu());
  for (const Flat& ray : star.rays()) per_ray.push_back(ray.generators());
  return GeneratorAssignment(std::move(per_ray));
}

/// Star-to-array construction: one column per ray, one run per GF(2)^p
/// vector. Run 0 is the all-zeros row; run i (the i-th effect a_i) gets
/// entry sum_l (a_i . delta_l^(j)) 2^(t_j - l) in column j, giving levels
/// {0, ..., 2^t_j - 1}. A nucleus-free star (a spread) yields an exact
/// strength-2 orthogonal array; otherwise the result is nearly orthogonal.
inline DesignArray star_to_noa(const Star& star, const GeneratorAssignment& gens) {
  validate_assignment(star, gens);
  const int p = star.p();
  const std::size_t runs = std::size_t{1} << p;
  const std::size_t d = star.mu();

  std::vector<int> level_counts(d);
  for (std::size_t j = 0; j < d; ++j) {
    level_counts[j] = 1 << star.rays()[j].rank();
  }

  IntMatrix values(runs, std::vector<int>(d, 0));
  for (std::uint32_t i = 1; i < runs; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& generators = gens.per_ray()[j];
      const int t = static_cast<int>(generators.size());
      int entry = 0;
      for (int l = 0; l < t; ++l) {
        const int bit = std::popcount(i & generators[static_cast<std::size_t>(l)].bits()) & 1;
        entry |= bit << (t - 1 - l);
      }
      values[i][j] = entry;
    }
  }
  const ArrayKind kind =
      star.nucleus_rank() == 0 ? ArrayKind::exact_oa : ArrayKind::noa;
  return DesignArray(std::move(values), std::move(level_counts), 2, kind);
}

}  // namespace starlhd
