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

#include "risbh/madrid.hpp"

#include <limits>
#include <optional>
#include <stdexcept>

namespace risbh
{

namespace
{

// Nearest facade hit by an axis-aligned ray from `from` along `dir` (a unit axis vector).
std::optional<Point2D> cast_to_facade(const std::vector<Building> &buildings, Point2D from, Point2D dir)
{
    std::optional<Point2D> best;
    double best_t = std::numeric_limits<double>::infinity();
    for (const auto &b : buildings)
    {
        const Box &bb = b.bbox();
        double t = 0.0;
        if (dir.x != 0.0)
        {
            if (!(from.y > bb.min.y && from.y < bb.max.y))
                continue;
            t = dir.x > 0.0 ? bb.min.x - from.x : from.x - bb.max.x;
        }
        else
        {
            if (!(from.x > bb.min.x && from.x < bb.max.x))
                continue;
            t = dir.y > 0.0 ? bb.min.y - from.y : from.y - bb.max.y;
        }
        if (t > 0.0 && t < best_t)
        {
            best_t = t;
            best = from + t * dir;
        }
    }
    return best;
}

} // namespace

Scenario madrid_like_scenario(const MadridGridSpec &spec)
{
    if (spec.blocks_x < 1 || spec.blocks_y < 1)
        throw std::invalid_argument("grid needs at least one block per axis");
    if (!(spec.block_w > 0.0) || !(spec.block_h > 0.0) || !(spec.street_w > 0.0))
        throw std::invalid_argument("block and street dimensions must be positive");

    const double width = spec.blocks_x * spec.block_w + (spec.blocks_x + 1) * spec.street_w;
    const double height = spec.blocks_y * spec.block_h + (spec.blocks_y + 1) * spec.street_w;
    const Box bounds{{0.0, 0.0}, {width, height}};
    const Point2D centre = bounds.center();

    std::vector<Building> buildings;
    for (int j = 0; j < spec.blocks_y; ++j)
    {
        for (int i = 0; i < spec.blocks_x; ++i)
        {
            const Point2D lo{spec.street_w + i * (spec.block_w + spec.street_w),
                             spec.street_w + j * (spec.block_h + spec.street_w)};
            const Point2D hi{lo.x + spec.block_w, lo.y + spec.block_h};
            const bool holds_centre = centre.x > lo.x && centre.x < hi.x && centre.y > lo.y && centre.y < hi.y;
            if (!holds_centre)
                buildings.push_back(make_rectangle(lo, hi));
        }
    }

    Scenario s;
    s.map = ObstacleMap(bounds, buildings);
    s.mbs = centre;
    s.candidates = CornerCandidates{};

    if (spec.ris_center_square)
    {
        const auto &bs = s.map.buildings();
        auto left = cast_to_facade(bs, centre, {-1.0, 0.0});
        auto right = cast_to_facade(bs, centre, {1.0, 0.0});
        if (left && right)
        {
            s.ris_sites.push_back({*left, {1.0, 0.0}});
            s.ris_sites.push_back({*right, {-1.0, 0.0}});
        }
        else
        {
            auto below = cast_to_facade(bs, centre, {0.0, -1.0});
            auto above = cast_to_facade(bs, centre, {0.0, 1.0});
            if (!below || !above)
                throw std::invalid_argument("layout has no pair of facing facades around the centre");
            s.ris_sites.push_back({*below, {0.0, 1.0}});
            s.ris_sites.push_back({*above, {0.0, -1.0}});
        }
    }
    s.validate();
    return s;
}

} // namespace risbh
