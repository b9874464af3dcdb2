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

#include <cstdint>
#include <random>
#include <string_view>

namespace aam {

using Rng = std::mt19937_64;

// FNV-1a over the label bytes. Stable across platforms, unlike std::hash.
constexpr std::uint64_t label_hash(std::string_view label) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Independent, reproducible substream keyed by (seed, label, index). Workers
// that need their own stream (per flight, per Monte Carlo trial block) pass a
// distinct index.
Rng make_stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

} // namespace aam
