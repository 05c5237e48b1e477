// SPDX-License-Identifier: Apache-2.0
//
// risbh - planner for RIS-aided multi-hop drone backhaul
// Copyright (C) 2026 The risbh authors
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

#include "risbh/scenario.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace risbh::cli
{

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitInvalidScenario = 3;
inline constexpr int kExitIoFailure = 4;

class ArgumentError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    Scenario scenario;
    std::filesystem::path out_dir;
};

// Each command writes its files under config.out_dir (created if missing)
// and returns the written paths in write order.
std::vector<std::filesystem::path> cmd_hops_map(const RunConfig &config);
std::vector<std::filesystem::path> cmd_rate_heatmap(const RunConfig &config);
std::vector<std::filesystem::path> cmd_coverage_bars(const RunConfig &config);

struct PathReport
{
    bool reachable_without_ris = false;
    bool reachable_with_ris = false;
    std::string text;
    std::vector<std::filesystem::path> files;
};
PathReport cmd_path(const RunConfig &config, Point2D dst);

// Parses argv, runs one subcommand and maps failures onto the exit codes above.
int run(int argc, const char *const *argv);

} // namespace risbh::cli
