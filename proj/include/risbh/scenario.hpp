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

#include "risbh/backhaul_graph.hpp"
#include "risbh/geometry.hpp"
#include "risbh/radio.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace risbh
{

class ScenarioError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct CornerCandidates
{
    double offset_m = 1.0;
    bool midpoints = false;

    friend bool operator==(const CornerCandidates &, const CornerCandidates &) = default;
};

struct ExplicitCandidates
{
    std::vector<Point2D> points;

    friend bool operator==(const ExplicitCandidates &, const ExplicitCandidates &) = default;
};

using CandidateSpec = std::variant<CornerCandidates, ExplicitCandidates>;

struct ExperimentSettings
{
    std::vector<double> snr_min_db{41.0, 31.0, 21.0, 11.0};
    int n_max = 8;
    double penalty_p = 200.0;
    double grid_spacing_m = 10.0;

    // Smallest SNR requirement in the list.
    [[nodiscard]] double least_strict_snr_db() const;

    friend bool operator==(const ExperimentSettings &, const ExperimentSettings &) = default;
};

struct Scenario
{
    ObstacleMap map;
    Point2D mbs;
    std::vector<RisSite> ris_sites;
    CandidateSpec candidates = CornerCandidates{};
    RadioParams radio;
    ExperimentSettings experiment;

    // Throws ScenarioError with a message naming the offending element.
    void validate() const;

    // Candidate drone positions, deterministic order. Never contains the MBS position.
    [[nodiscard]] std::vector<Point2D> candidate_positions() const;

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

// Parses and validates a scenario document (JSON). Omitted radio and
// experiment fields take their defaults; omitted "ris" means no RIS.
Scenario load_scenario(std::string_view document);
Scenario load_scenario_file(const std::filesystem::path &path);

std::string save_scenario(const Scenario &scenario);

} // namespace risbh
