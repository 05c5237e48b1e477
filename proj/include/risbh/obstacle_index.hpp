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

#include "risbh/geometry.hpp"

#include <cstdint>
#include <vector>

namespace risbh
{

// Uniform grid over the map bounds; each cell lists the buildings whose
// bounding box overlaps it. Segment queries walk the cells the segment passes
// through and run the exact per-building predicate only on those buildings,
// so answers are identical to segment_blocked() on the full map.
class ObstacleIndex
{
  public:
    explicit ObstacleIndex(const ObstacleMap &map);

    [[nodiscard]] bool segment_blocked(Point2D a, Point2D b) const;
    [[nodiscard]] bool visible(Point2D a, Point2D b) const { return !segment_blocked(a, b); }

    [[nodiscard]] const ObstacleMap &map() const { return *map_; }
    [[nodiscard]] double cell_size() const { return cell_; }

  private:
    [[nodiscard]] int cell_x(double x) const;
    [[nodiscard]] int cell_y(double y) const;

    const ObstacleMap *map_;
    double cell_ = 1.0;
    int nx_ = 1;
    int ny_ = 1;
    std::vector<std::uint32_t> cell_start_; // CSR offsets, size nx*ny+1
    std::vector<std::uint32_t> cell_items_;
};

} // namespace risbh
