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

#include "risbh/obstacle_index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace risbh
{

ObstacleIndex::ObstacleIndex(const ObstacleMap &map) : map_(&map)
{
    const Box &bounds = map.bounds();
    const auto &buildings = map.buildings();

    double mean_extent = 0.0;
    for (const auto &b : buildings)
        mean_extent += std::max(b.bbox().width(), b.bbox().height());
    mean_extent = buildings.empty() ? std::max(bounds.width(), bounds.height()) : mean_extent / buildings.size();

    // Roughly one building per cell, bounded so tiny or degenerate inputs stay sane.
    const double span = std::max(bounds.width(), bounds.height());
    cell_ = std::clamp(mean_extent, span / 1024.0, span);
    nx_ = std::max(1, static_cast<int>(std::ceil(bounds.width() / cell_)));
    ny_ = std::max(1, static_cast<int>(std::ceil(bounds.height() / cell_)));

    const double pad = std::max(1e-6, cell_ * 1e-9);
    std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(nx_) * ny_);
    for (std::size_t i = 0; i < buildings.size(); ++i)
    {
        const Box &bb = buildings[i].bbox();
        const int x0 = cell_x(bb.min.x - pad);
        const int x1 = cell_x(bb.max.x + pad);
        const int y0 = cell_y(bb.min.y - pad);
        const int y1 = cell_y(bb.max.y + pad);
        for (int y = y0; y <= y1; ++y)
            for (int x = x0; x <= x1; ++x)
                cells[static_cast<std::size_t>(y) * nx_ + x].push_back(static_cast<std::uint32_t>(i));
    }
    cell_start_.reserve(cells.size() + 1);
    cell_start_.push_back(0);
    for (const auto &c : cells)
    {
        cell_items_.insert(cell_items_.end(), c.begin(), c.end());
        cell_start_.push_back(static_cast<std::uint32_t>(cell_items_.size()));
    }
}

int ObstacleIndex::cell_x(double x) const
{
    return std::clamp(static_cast<int>(std::floor((x - map_->bounds().min.x) / cell_)), 0, nx_ - 1);
}

int ObstacleIndex::cell_y(double y) const
{
    return std::clamp(static_cast<int>(std::floor((y - map_->bounds().min.y) / cell_)), 0, ny_ - 1);
}

bool ObstacleIndex::segment_blocked(Point2D a, Point2D b) const
{
    if (distance(a, b) <= kGeomEps)
        throw GeometryError("segment endpoints coincide");

    const auto &buildings = map_->buildings();
    thread_local std::vector<std::uint32_t> tested;
    tested.clear();

    auto check_cell = [&](int cx, int cy) {
        const std::size_t c = static_cast<std::size_t>(cy) * nx_ + cx;
        for (std::uint32_t k = cell_start_[c]; k < cell_start_[c + 1]; ++k)
        {
            const std::uint32_t id = cell_items_[k];
            if (std::find(tested.begin(), tested.end(), id) != tested.end())
                continue;
            tested.push_back(id);
            if (segment_blocked_by(a, b, buildings[id]))
                return true;
        }
        return false;
    };

    // Grid walk from a to b (Amanatides-Woo). When the walk crosses a cell
    // corner it also visits both side cells so no overlapped cell is skipped.
    int cx = cell_x(a.x);
    int cy = cell_y(a.y);
    const int ex = cell_x(b.x);
    const int ey = cell_y(b.y);
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const int step_x = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
    const int step_y = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
    const Point2D origin = map_->bounds().min;

    const double inf = std::numeric_limits<double>::infinity();
    double t_max_x = inf;
    double t_max_y = inf;
    double t_dx = inf;
    double t_dy = inf;
    if (step_x != 0)
    {
        const double next = origin.x + (cx + (step_x > 0 ? 1 : 0)) * cell_;
        t_max_x = (next - a.x) / dx;
        t_dx = cell_ / std::abs(dx);
    }
    if (step_y != 0)
    {
        const double next = origin.y + (cy + (step_y > 0 ? 1 : 0)) * cell_;
        t_max_y = (next - a.y) / dy;
        t_dy = cell_ / std::abs(dy);
    }

    const int max_steps = std::abs(ex - cx) + std::abs(ey - cy) + 1;
    for (int s = 0; s <= max_steps; ++s)
    {
        if (check_cell(cx, cy))
            return true;
        if (cx == ex && cy == ey)
            break;
        const bool move_x = (cx != ex) && (cy == ey || t_max_x <= t_max_y);
        const bool move_y = (cy != ey) && (cx == ex || t_max_y <= t_max_x);
        if (move_x && move_y)
        {
            // Corner crossing: cover both neighbours before stepping diagonally.
            if (check_cell(cx + step_x, cy) || check_cell(cx, cy + step_y))
                return true;
            cx += step_x;
            cy += step_y;
            t_max_x += t_dx;
            t_max_y += t_dy;
            ++s;
        }
        else if (move_x)
        {
            cx += step_x;
            t_max_x += t_dx;
        }
        else
        {
            cy += step_y;
            t_max_y += t_dy;
        }
    }
    return false;
}

} // namespace risbh
