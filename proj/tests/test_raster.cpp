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
#include "risbh/raster.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace risbh;

namespace
{

Scenario small_scene()
{
    Scenario s;
    s.map = ObstacleMap({{0, 0}, {200, 120}},
                        {make_rectangle({60, 0}, {80, 80}), make_rectangle({120, 40}, {140, 120})});
    s.mbs = {25, 25};
    s.ris_sites = {{{140, 100}, {1, 0}}};
    s.experiment.grid_spacing_m = 10;
    return s;
}

std::vector<std::string> lines_of(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST(Raster, GridShapeAndCellCentres)
{
    const BackhaulModel model(small_scene());
    const RateRaster r = rasterize_rate_map(model, false);
    EXPECT_EQ(r.width, 20u);
    EXPECT_EQ(r.height, 12u);
    EXPECT_EQ(r.cell_center(0, 0), (Point2D{5, 5}));
    EXPECT_EQ(r.cell_center(19, 11), (Point2D{195, 115}));

    RasterSettings coarse{LinkRequirement::from_snr_db(11), 8, 200, 300};
    const RateRaster one = rasterize_rate_map(model, false, coarse);
    EXPECT_EQ(one.width, 1u);
    EXPECT_EQ(one.height, 1u);
}

TEST(Raster, RejectsBadSettings)
{
    const BackhaulModel model(small_scene());
    EXPECT_THROW(rasterize_rate_map(model, false, {LinkRequirement::from_snr_db(11), 8, 200, 0}),
                 std::invalid_argument);
    EXPECT_THROW(rasterize_rate_map(model, false, {LinkRequirement::from_snr_db(11), 0, 200, 10}),
                 std::invalid_argument);
}

TEST(Raster, EveryCellMatchesItsOwnRoute)
{
    const BackhaulModel model(small_scene());
    const ExperimentSettings &ex = model.scenario().experiment;
    for (const bool ris : {false, true})
    {
        for (const int n_max : {1, 2, 8})
        {
            const auto req = LinkRequirement::from_snr_db(41.0);
            const RateRaster r = rasterize_rate_map(model, ris, {req, n_max, ex.penalty_p, 10});
            const AugmentedGraph &g = model.graph(ris);
            for (std::size_t iy = 0; iy < r.height; ++iy)
                for (std::size_t ix = 0; ix < r.width; ++ix)
                {
                    const Point2D c = r.cell_center(ix, iy);
                    const RasterCell &cell = r.at(ix, iy);
                    if (model.scenario().map.strictly_inside_any(c))
                    {
                        EXPECT_EQ(cell.status, CellStatus::Building);
                        continue;
                    }
                    if (cell.status == CellStatus::Mbs)
                    {
                        EXPECT_EQ(c, model.scenario().mbs);
                        continue;
                    }
                    // Cells centred on a node take that node's route.
                    const auto node = model.node_at(c);
                    const auto path = node ? shortest_path(g, *node, req, ex.penalty_p, n_max)
                                           : shortest_path(with_probe(g, c, model.index()), g.node_count(), req,
                                                           ex.penalty_p, n_max);
                    if (!path)
                    {
                        EXPECT_EQ(cell.status, CellStatus::NoCoverage) << ix << "," << iy;
                        continue;
                    }
                    ASSERT_EQ(cell.status, CellStatus::Covered) << ix << "," << iy;
                    EXPECT_EQ(cell.rate_bps, path->bottleneck_rate_bps);
                    EXPECT_GE(cell.rate_bps, req.c_min_bps(g.radio()));
                }
        }
    }
}

TEST(Raster, AgreesWithReachableSetAtCandidates)
{
    // Candidates placed exactly on cell centres.
    Scenario s = small_scene();
    ExplicitCandidates ec;
    for (const Point2D p : std::vector<Point2D>{{45, 105}, {95, 15}, {105, 95}, {175, 25}, {185, 115}, {155, 65}})
        ec.points.push_back(p);
    s.candidates = ec;
    s.experiment.snr_min_db = {41, 31};
    for (const int n_max : {1, 2, 3})
    {
        s.experiment.n_max = n_max;
        const BackhaulModel model(s);
        for (const bool ris : {false, true})
        {
            const RateRaster r = rasterize_rate_map(model, ris);
            const auto reached = reachable_set(model.graph(ris), n_max, 31.0);
            for (std::size_t v = 1; v < model.nodes().size(); ++v)
            {
                const Point2D p = model.nodes()[v];
                const auto ix = static_cast<std::size_t>(p.x / 10.0);
                const auto iy = static_cast<std::size_t>(p.y / 10.0);
                const bool covered = r.at(ix, iy).status == CellStatus::Covered;
                const bool listed = std::find(reached.begin(), reached.end(), v) != reached.end();
                EXPECT_EQ(covered, listed) << "node " << v << " n_max " << n_max << " ris " << ris;
            }
        }
    }
}

TEST(Raster, MbsCellIsMarked)
{
    Scenario s = small_scene();
    s.mbs = {15, 15};
    const BackhaulModel model(s);
    const RateRaster r = rasterize_rate_map(model, false);
    EXPECT_EQ(r.at(1, 1).status, CellStatus::Mbs);
    EXPECT_TRUE(std::isinf(r.at(1, 1).rate_bps));
}

TEST(Raster, RisNeverLowersCoverage)
{
    const BackhaulModel model(madrid_like_scenario({5, 5, 120, 120, 15, true}));
    RasterSettings settings{LinkRequirement::from_snr_db(41.0), 2, 200, 15};
    const RateRaster a = rasterize_rate_map(model, false, settings);
    const RateRaster b = rasterize_rate_map(model, true, settings);
    std::size_t gained = 0;
    for (std::size_t k = 0; k < a.cells.size(); ++k)
    {
        if (a.cells[k].status == CellStatus::Covered)
            EXPECT_NE(b.cells[k].status, CellStatus::NoCoverage);
        gained += a.cells[k].status == CellStatus::NoCoverage && b.cells[k].status == CellStatus::Covered;
    }
    EXPECT_GT(gained, 0u);
}

TEST(RasterOutput, PgmLayout)
{
    RateRaster r;
    r.origin = {0, 0};
    r.spacing = 10;
    r.width = 3;
    r.height = 2;
    r.cells = {{CellStatus::Building, 0},
               {CellStatus::NoCoverage, 0},
               {CellStatus::Covered, 50e6},
               {CellStatus::Mbs, INFINITY},
               {CellStatus::Covered, 100e6},
               {CellStatus::Covered, 400e6}};
    std::ostringstream out;
    write_pgm(r, 100e6, out);
    const auto lines = lines_of(out.str());
    ASSERT_EQ(lines.size(), 7u);
    EXPECT_EQ(lines[0], "P2");
    EXPECT_EQ(lines[1], "# rate_ref_bps 100000000.000");
    EXPECT_EQ(lines[3], "3 2");
    EXPECT_EQ(lines[4], "255");
    // Top row first.
    EXPECT_EQ(lines[5], "255 254 254");
    EXPECT_EQ(lines[6], "0 1 128");
}

TEST(RasterOutput, CsvRows)
{
    RateRaster r;
    r.origin = {100, 200};
    r.spacing = 5;
    r.width = 2;
    r.height = 2;
    r.cells = {{CellStatus::Covered, 1234.5678},
               {CellStatus::NoCoverage, 0},
               {CellStatus::Building, 0},
               {CellStatus::Mbs, INFINITY}};
    std::ostringstream out;
    write_raster_csv(r, out);
    EXPECT_EQ(out.str(), "x,y,rate_bps,status\n"
                         "102.500,202.500,1234.568,covered\n"
                         "107.500,202.500,,no_coverage\n"
                         "102.500,207.500,,building\n"
                         "107.500,207.500,inf,mbs\n");
}

TEST(RasterOutput, ReferenceRateIgnoresMbs)
{
    RateRaster r;
    r.width = 2;
    r.height = 1;
    r.cells = {{CellStatus::Mbs, INFINITY}, {CellStatus::Covered, 7.0}};
    EXPECT_EQ(max_finite_rate(r), 7.0);
    r.cells[1] = {CellStatus::NoCoverage, 0};
    EXPECT_EQ(max_finite_rate(r), 1.0);
}
