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

#include "aamsim/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <stdexcept>

#include <openssl/evp.h>

namespace aam::io {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("sha256_file: cannot open " + path.string());

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256_file: digest init failed");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    if (got > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(got));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);

  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 0xF];
  }
  return out;
}

OutputSet::OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

void OutputSet::write_text(std::string_view name, std::string_view content) {
  const auto p = path(name);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + p.string());
  files_.emplace_back(name);
}

void OutputSet::write_json(std::string_view name, const nlohmann::json& j) {
  write_text(name, j.dump(2) + "\n");
}

void OutputSet::write_csv(std::string_view name, const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::string text;
  const auto append_row = [&text](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) text += ',';
      text += r[i];
    }
    text += '\n';
  };
  append_row(header);
  for (const auto& r : rows) append_row(r);
  write_text(name, text);
}

void OutputSet::write_manifest(std::string_view subcommand, const nlohmann::json& config,
                               std::uint64_t seed, double wall_clock_s) const {
  nlohmann::json m;
  m["subcommand"] = subcommand;
  m["version"] = kVersionTag;
  m["seed"] = seed;
  m["config"] = config;
  m["wall_clock_s"] = wall_clock_s;
  m["outputs"] = nlohmann::json::array();
  for (const auto& f : files_) {
    m["outputs"].push_back({{"file", f}, {"sha256", sha256_file(path(f))}});
  }
  std::ofstream out(path("manifest.json"), std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write manifest.json");
  out << m.dump(2) << "\n";
}

} // namespace aam::io
