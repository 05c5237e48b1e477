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
#include "risbh/obstacle_index.hpp"
#include "risbh/scenario.hpp"

#include <memory>
#include <optional>

namespace risbh
{

// Everything derived from one scenario: the obstacle index, the node list
// (MBS at index 0, then candidates) and both graph variants.
class BackhaulModel
{
  public:
    explicit BackhaulModel(Scenario scenario);

    BackhaulModel(const BackhaulModel &) = delete;
    BackhaulModel &operator=(const BackhaulModel &) = delete;

    [[nodiscard]] const Scenario &scenario() const { return scenario_; }
    [[nodiscard]] const ObstacleIndex &index() const { return *index_; }
    [[nodiscard]] const std::vector<Point2D> &nodes() const { return nodes_; }
    [[nodiscard]] std::size_t candidate_count() const { return nodes_.size() - 1; }
    [[nodiscard]] bool has_ris() const { return !scenario_.ris_sites.empty(); }
    [[nodiscard]] const AugmentedGraph &graph(bool with_ris) const { return with_ris ? *with_ris_ : *without_ris_; }

    // Graph node located at p (within 1e-6 m), if any.
    [[nodiscard]] std::optional<std::size_t> node_at(Point2D p) const;

  private:
    Scenario scenario_;
    std::unique_ptr<ObstacleIndex> index_;
    std::vector<Point2D> nodes_;
    std::unique_ptr<AugmentedGraph> without_ris_;
    std::unique_ptr<AugmentedGraph> with_ris_;
};

} // namespace risbh
