// SPDX-License-Identifier: Apache-2.0
//
// aamsim: cellular coverage, handover and localization studies for air corridors
// Copyright (C) 2026 The aamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace aam::io {

// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double v);

// Lowercase hex SHA-256 of a file's bytes.
std::string sha256_file(const std::filesystem::path& path);

// Accumulates the files a subcommand writes, then emits manifest.json last.
class OutputSet {
public:
  explicit OutputSet(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path(std::string_view name) const { return dir_ / name; }

  void write_text(std::string_view name, std::string_view content);
  void write_json(std::string_view name, const nlohmann::json& j);
  void write_csv(std::string_view name, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

  const std::vector<std::string>& files() const { return files_; }

  // manifest.json: subcommand, config snapshot, seed, version, wall-clock
  // seconds and one SHA-256 digest per output file.
  void write_manifest(std::string_view subcommand, const nlohmann::json& config, std::uint64_t seed,
                      double wall_clock_s) const;

private:
  std::filesystem::path dir_;
  std::vector<std::string> files_;
};

inline constexpr std::string_view kVersionTag = "aamsim-1.0.0";

} // namespace aam::io
