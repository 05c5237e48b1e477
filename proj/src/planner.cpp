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

#include "risbh/planner.hpp"

namespace risbh
{

BackhaulModel::BackhaulModel(Scenario scenario) : scenario_(std::move(scenario))
{
    scenario_.validate();
    index_ = std::make_unique<ObstacleIndex>(scenario_.map);

    nodes_.push_back(scenario_.mbs);
    for (const Point2D p : scenario_.candidate_positions())
        nodes_.push_back(p);

    const VisibilityGraph vg = build_visibility_graph(nodes_, scenario_.map);
    without_ris_ = std::make_unique<AugmentedGraph>(augment_with_ris(vg, 0, {}, *index_, scenario_.radio));
    if (scenario_.ris_sites.empty())
        with_ris_ = std::make_unique<AugmentedGraph>(*without_ris_);
    else
        with_ris_ = std::make_unique<AugmentedGraph>(
            augment_with_ris(vg, 0, scenario_.ris_sites, *index_, scenario_.radio));
}

std::optional<std::size_t> BackhaulModel::node_at(Point2D p) const
{
    for (std::size_t v = 0; v < nodes_.size(); ++v)
        if (distance(nodes_[v], p) <= 1e-6)
            return v;
    return std::nullopt;
}

} // namespace risbh
