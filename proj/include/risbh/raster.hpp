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

#include "risbh/planner.hpp"
#include "risbh/routing.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace risbh
{

enum class CellStatus : std::uint8_t
{
    Covered,
    NoCoverage,
    Building,
    Mbs, // cell centre at the MBS: zero-hop, unbounded rate
};

struct RasterCell
{
    CellStatus status = CellStatus::NoCoverage;
    double rate_bps = 0.0; // bottleneck rate when Covered, +inf for Mbs, 0 otherwise

    friend bool operator==(const RasterCell &, const RasterCell &) = default;
};

// Row-major grid of achievable-rate samples. Row 0 is the lowest y.
struct RateRaster
{
    Point2D origin;
    double spacing = 1.0;
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<RasterCell> cells;

    [[nodiscard]] Point2D cell_center(std::size_t ix, std::size_t iy) const
    {
        return {origin.x + (ix + 0.5) * spacing, origin.y + (iy + 0.5) * spacing};
    }
    [[nodiscard]] const RasterCell &at(std::size_t ix, std::size_t iy) const { return cells[iy * width + ix]; }
};

struct RasterSettings
{
    LinkRequirement requirement;
    int n_max = 8;
    double penalty_db = 200.0;
    double spacing_m = 10.0;
};

// Each cell centre outside the buildings is routed as an independent probe
// (or as the graph node it coincides with) and stores the bottleneck rate of
// its selected path within n_max hops.
RateRaster rasterize_rate_map(const BackhaulModel &model, bool with_ris, const RasterSettings &settings);

// Scenario-driven form: least-strict SNR requirement, n_max, penalty and grid
// spacing all come from the scenario's experiment settings.
RateRaster rasterize_rate_map(const BackhaulModel &model, bool with_ris);

// P2 graymap, maxval 255, top row = highest y. 0 building, 1 no coverage,
// 255 MBS, covered cells 2 + round(252 * min(rate / rate_ref, 1)).
void write_pgm(const RateRaster &raster, double rate_ref_bps, std::ostream &out);

// Columns x,y,rate_bps,status. rate_bps is empty for building/no_coverage cells and "inf" for the MBS cell.
void write_raster_csv(const RateRaster &raster, std::ostream &out);

// Largest finite covered rate, or 1 if none.
double max_finite_rate(const RateRaster &raster);

} // namespace risbh
