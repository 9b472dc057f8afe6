#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "starlhd/design_array.hpp"
#include "starlhd/flat.hpp"
#include "starlhd/lhd.hpp"
#include "starlhd/noa.hpp"
#include "starlhd/pencil.hpp"
#include "starlhd/spread.hpp"
#include "starlhd/star.hpp"

// JSON round-trips for the geometry and array types. Field names are part of
// the file format contract; every from_* rebuilds through the validating
// constructors, so malformed documents are rejected rather than deserialized
// verbatim.

namespace starlhd {

inline nlohmann::json to_json(const Pencil& pencil) {
  return {{"p", pencil.p()}, {"label", pencil.label()}, {"index", pencil.index()}};
}

inline Pencil pencil_from_json(const nlohmann::json& j) {
  const Pencil parsed =
      Pencil::from_label(j.at("label").get<std::string>(), j.at("p").get<int>());
  if (j.contains("index") && j.at("index").get<std::uint32_t>() != parsed.index()) {
    throw std::invalid_argument("pencil label and index disagree");
  }
  return parsed;
}

inline nlohmann::json to_json(const Flat& flat) {
  nlohmann::json generators = nlohmann::json::array();
  for (const Pencil& g : flat.generators()) generators.push_back(g.label());
  nlohmann::json points = nlohmann::json::array();
  for (const Pencil& pt : flat.points()) points.push_back(pt.label());
  return {{"p", flat.p()},
          {"rank", flat.rank()},
          {"generators", generators},
          {"points", points}};
}

inline Flat flat_from_json(const nlohmann::json& j) {
  const int p = j.at("p").get<int>();
  const auto labels = j.at("generators").get<std::vector<std::string>>();
  const Flat flat = labels.empty() ? Flat::empty(p) : span_labels(p, labels);
  if (j.contains("points")) {
    const auto point_labels = j.at("points").get<std::vector<std::string>>();
    std::vector<Pencil> points;
    points.reserve(point_labels.size());
    for (const std::string& label : point_labels) {
      points.push_back(Pencil::from_label(label, p));
    }
    if (!(Flat::from_points(points, p) == flat)) {
      throw std::invalid_argument("flat points do not match the generator span");
    }
  }
  return flat;
}

inline nlohmann::json to_json(const Star& star) {
  nlohmann::json rays = nlohmann::json::array();
  for (const Flat& ray : star.rays()) rays.push_back(to_json(ray));
  return {{"p", star.p()}, {"nucleus", to_json(star.nucleus())}, {"rays", rays}};
}

inline Star star_from_json(const nlohmann::json& j) {
  std::vector<Flat> rays;
  for (const nlohmann::json& ray : j.at("rays")) rays.push_back(flat_from_json(ray));
  return Star(flat_from_json(j.at("nucleus")), std::move(rays));
}

inline nlohmann::json to_json(const Spread& spread) {
  nlohmann::json flats = nlohmann::json::array();
  for (const Flat& flat : spread.flats()) flats.push_back(to_json(flat));
  return {{"p", spread.p()}, {"rank", spread.rank()}, {"flats", flats}};
}

inline Spread spread_from_json(const nlohmann::json& j) {
  std::vector<Flat> flats;
  for (const nlohmann::json& flat : j.at("flats")) flats.push_back(flat_from_json(flat));
  return Spread(std::move(flats), j.at("p").get<int>());
}

inline nlohmann::json to_json(const GeneratorAssignment& gens) {
  return {{"p", gens.p()}, {"generators", gens.labels()}};
}

inline GeneratorAssignment assignment_from_json(const nlohmann::json& j) {
  return GeneratorAssignment::from_labels(
      j.at("p").get<int>(),
      j.at("generators").get<std::vector<std::vector<std::string>>>());
}

inline nlohmann::json to_json(const DesignArray& arr) {
  return {{"level_counts", arr.level_counts()},
          {"strength_claim", arr.strength_claim()},
          {"kind", to_string(arr.kind())},
          {"values", arr.values()}};
}

inline DesignArray design_array_from_json(const nlohmann::json& j) {
  return DesignArray(j.at("values").get<IntMatrix>(),
                     j.at("level_counts").get<std::vector<int>>(),
                     j.at("strength_claim").get<int>(),
                     array_kind_from_string(j.at("kind").get<std::string>()));
}

/// Sidecar describing how a Latin hypercube file was produced.
struct LhdProvenance {
  std::string source_array_digest;  // FNV-1a 64 hex of the array CSV
  std::uint64_t expand_seed = 0;
  std::uint64_t perturb_seed = 0;
  std::string mode;  // "uniform" | "midpoint"
};

inline nlohmann::json to_json(const LhdProvenance& provenance) {
  return {{"source_array_digest", provenance.source_array_digest},
          {"expand_seed", provenance.expand_seed},
          {"perturb_seed", provenance.perturb_seed},
          {"mode", provenance.mode}};
}

inline LhdProvenance provenance_from_json(const nlohmann::json& j) {
  LhdProvenance provenance;
  provenance.source_array_digest = j.at("source_array_digest").get<std::string>();
  provenance.expand_seed = j.at("expand_seed").get<std::uint64_t>();
  provenance.perturb_seed = j.at("perturb_seed").get<std::uint64_t>();
  provenance.mode = j.at("mode").get<std::string>();
  return provenance;
}

}  // namespace starlhd
