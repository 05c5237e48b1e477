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

#include "risbh/raster.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace risbh
{

RateRaster rasterize_rate_map(const BackhaulModel &model, bool with_ris, const RasterSettings &settings)
{
    if (!(settings.spacing_m > 0.0))
        throw std::invalid_argument("raster spacing must be positive");
    if (settings.n_max < 1)
        throw std::invalid_argument("hop budget must be at least 1");

    const AugmentedGraph &g = model.graph(with_ris);
    const ObstacleMap &map = model.scenario().map;
    const Box &bounds = map.bounds();

    RateRaster raster;
    raster.origin = bounds.min;
    raster.spacing = settings.spacing_m;
    raster.width = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(bounds.width() / settings.spacing_m)));
    raster.height =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(bounds.height() / settings.spacing_m)));
    raster.cells.resize(raster.width * raster.height);

    const RouteTree routes(g, settings.requirement, settings.penalty_db, settings.n_max);
    // Nodes that cannot take one more hop never lead a probe anywhere.
    const std::vector<bool> extendable = routes.extendable();

    for (std::size_t iy = 0; iy < raster.height; ++iy)
    {
        for (std::size_t ix = 0; ix < raster.width; ++ix)
        {
            RasterCell &cell = raster.cells[iy * raster.width + ix];
            const Point2D c = raster.cell_center(ix, iy);
            if (map.strictly_inside_any(c))
            {
                cell = {CellStatus::Building, 0.0};
                continue;
            }
            if (const auto node = model.node_at(c))
            {
                if (*node == g.mbs_index())
                {
                    cell = {CellStatus::Mbs, std::numeric_limits<double>::infinity()};
                }
                else if (const auto path = routes.path_to(*node))
                {
                    cell = {CellStatus::Covered, path->bottleneck_rate_bps};
                }
                else
                {
                    cell = {CellStatus::NoCoverage, 0.0};
                }
                continue;
            }
            const auto attach = probe_edges(g, c, model.index(), &extendable);
            if (const auto route = routes.route_probe(attach))
                cell = {CellStatus::Covered, route->bottleneck_rate_bps};
            else
                cell = {CellStatus::NoCoverage, 0.0};
        }
    }
    return raster;
}

RateRaster rasterize_rate_map(const BackhaulModel &model, bool with_ris)
{
    const ExperimentSettings &ex = model.scenario().experiment;
    return rasterize_rate_map(model, with_ris,
                              {LinkRequirement::from_snr_db(ex.least_strict_snr_db()), ex.n_max, ex.penalty_p,
                               ex.grid_spacing_m});
}

double max_finite_rate(const RateRaster &raster)
{
    double best = 0.0;
    for (const auto &cell : raster.cells)
        if (cell.status == CellStatus::Covered && std::isfinite(cell.rate_bps))
            best = std::max(best, cell.rate_bps);
    return best > 0.0 ? best : 1.0;
}

void write_pgm(const RateRaster &raster, double rate_ref_bps, std::ostream &out)
{
    fmt::print(out, "P2\n# rate_ref_bps {:.3f}\n# 0=building 1=no_coverage 255=mbs 2..254=rate\n{} {}\n255\n",
               rate_ref_bps, raster.width, raster.height);
    for (std::size_t row = 0; row < raster.height; ++row)
    {
        const std::size_t iy = raster.height - 1 - row;
        for (std::size_t ix = 0; ix < raster.width; ++ix)
        {
            const RasterCell &cell = raster.at(ix, iy);
            int value = 1;
            switch (cell.status)
            {
            case CellStatus::Building:
                value = 0;
                break;
            case CellStatus::NoCoverage:
                value = 1;
                break;
            case CellStatus::Mbs:
                value = 255;
                break;
            case CellStatus::Covered:
                value = 2 + static_cast<int>(std::lround(252.0 * std::min(cell.rate_bps / rate_ref_bps, 1.0)));
                break;
            }
            fmt::print(out, "{}{}", ix == 0 ? "" : " ", value);
        }
        out << '\n';
    }
}

void write_raster_csv(const RateRaster &raster, std::ostream &out)
{
    out << "x,y,rate_bps,status\n";
    for (std::size_t iy = 0; iy < raster.height; ++iy)
    {
        for (std::size_t ix = 0; ix < raster.width; ++ix)
        {
            const Point2D c = raster.cell_center(ix, iy);
            const RasterCell &cell = raster.at(ix, iy);
            switch (cell.status)
            {
            case CellStatus::Covered:
                fmt::print(out, "{:.3f},{:.3f},{:.3f},covered\n", c.x, c.y, cell.rate_bps);
                break;
            case CellStatus::NoCoverage:
                fmt::print(out, "{:.3f},{:.3f},,no_coverage\n", c.x, c.y);
                break;
            case CellStatus::Building:
                fmt::print(out, "{:.3f},{:.3f},,building\n", c.x, c.y);
                break;
            case CellStatus::Mbs:
                fmt::print(out, "{:.3f},{:.3f},inf,mbs\n", c.x, c.y);
                break;
            }
        }
    }
}

} // namespace risbh
