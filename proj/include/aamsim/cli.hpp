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

namespace aam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;
inline constexpr int kExitUsage = 64;

// Entry point shared by the executable and the tests. Subcommands: coverage,
// optimize, handover, localize, corridor-check, pattern-dump.
int dispatch(int argc, char** argv);

} // namespace aam::cli
