#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lham {

/// Lower-case hex SHA-256 of a file's bytes. Throws InputError if unreadable.
std::string sha256_file(const std::string& path);
std::string sha256_hex(const std::string& bytes);

/// Enough to rerun an artifact-producing command bit-exactly.
struct RunManifest {
  std::string command;
  std::vector<std::string> arguments;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
  std::vector<std::string> outputs;
  std::int64_t wall_ms = 0;

  void add_input(const std::string& path) { inputs.emplace_back(path, sha256_file(path)); }
};

nlohmann::json manifest_to_json(const RunManifest& m);

/// Writes the manifest as pretty-printed JSON. Throws InputError on failure.
void write_manifest(const RunManifest& m, const std::string& path);

}  // namespace lham
