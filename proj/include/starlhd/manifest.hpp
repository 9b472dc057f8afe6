#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "starlhd/hash.hpp"
#include "starlhd/version.hpp"

namespace starlhd {

/// Record of one CLI run: command, parameters, seeds and the digests of all
/// files read and written. Commands are pure functions of (parameters,
/// inputs, seeds), so re-running a manifest reproduces byte-identical
/// outputs.
struct RunManifest {
  static constexpr int kSchemaVersion = 1;

  struct FileDigest {
    std::string path;
    std::string fnv1a64;
  };

  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json seeds = nlohmann::json::object();
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  std::string library_version{kVersion};

  void add_input(const std::string& path) {
    inputs.push_back({path, file_digest_hex(path)});
  }
  void add_output(const std::string& path) {
    outputs.push_back({path, file_digest_hex(path)});
  }
};

inline nlohmann::json to_json(const RunManifest& manifest) {
  const auto files_to_json = [](const std::vector<RunManifest::FileDigest>& files) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& file : files) {
      out.push_back({{"path", file.path}, {"fnv1a64", file.fnv1a64}});
    }
    return out;
  };
  return {{"schema_version", RunManifest::kSchemaVersion},
          {"command", manifest.command},
          {"parameters", manifest.parameters},
          {"seeds", manifest.seeds},
          {"inputs", files_to_json(manifest.inputs)},
          {"outputs", files_to_json(manifest.outputs)},
          {"library_version", manifest.library_version}};
}

inline RunManifest manifest_from_json(const nlohmann::json& j) {
  if (j.at("schema_version").get<int>() != RunManifest::kSchemaVersion) {
    throw std::invalid_argument("unsupported manifest schema version");
  }
  RunManifest manifest;
  manifest.command = j.at("command").get<std::string>();
  manifest.parameters = j.at("parameters");
  manifest.seeds = j.at("seeds");
  for (const auto& file : j.at("inputs")) {
    manifest.inputs.push_back({file.at("path").get<std::string>(),
                               file.at("fnv1a64").get<std::string>()});
  }
  for (const auto& file : j.at("outputs")) {
    manifest.outputs.push_back({file.at("path").get<std::string>(),
                                file.at("fnv1a64").get<std::string>()});
  }
  manifest.library_version = j.at("library_version").get<std::string>();
  return manifest;
}

/// Writes text to `path` atomically (temp file + rename), creating parent
/// directories as needed.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::string& contents) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace starlhd
