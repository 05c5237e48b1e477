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

#include "oracles.hpp"
#include "risbh/geometry.hpp"
#include "risbh/obstacle_index.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace risbh;

namespace
{

ObstacleMap single_box_map()
{
    return ObstacleMap({{0, 0}, {100, 100}}, {make_rectangle({40, 40}, {60, 60})});
}

bool oracle_visible(Point2D a, Point2D b, const std::vector<oracle::Rect> &rects)
{
    return std::none_of(rects.begin(), rects.end(),
                        [&](const oracle::Rect &r) { return oracle::rect_blocks(a.x, a.y, b.x, b.y, r); });
}

struct RandomScene
{
    ObstacleMap map;
    std::vector<oracle::Rect> rects;
    std::vector<Point2D> points;
};

// Coordinates snap to a 0.5 m lattice so that grazing contacts, collinear
// runs along faces and exact corner hits occur often.
RandomScene random_scene(std::mt19937_64 &rng, int max_rects, int max_points)
{
    std::uniform_int_distribution<int> coord(0, 200);
    std::uniform_int_distribution<int> corner(0, 160);
    std::uniform_int_distribution<int> size(2, 50);
    std::uniform_int_distribution<int> n_rects(0, max_rects);
    std::uniform_int_distribution<int> n_points(2, max_points);
    RandomScene s;
    std::vector<Building> buildings;
    const int nr = n_rects(rng);
    for (int k = 0; k < nr; ++k)
    {
        const double x0 = 0.5 * corner(rng);
        const double y0 = 0.5 * corner(rng);
        const double x1 = std::min(100.0, x0 + 0.5 * size(rng));
        const double y1 = std::min(100.0, y0 + 0.5 * size(rng));
        if (x1 <= x0 || y1 <= y0)
            continue;
        buildings.push_back(make_rectangle({x0, y0}, {x1, y1}));
        s.rects.push_back({x0, y0, x1, y1});
    }
    s.map = ObstacleMap({{0, 0}, {100, 100}}, std::move(buildings));
    const int np = n_points(rng);
    std::set<std::pair<double, double>> used;
    int attempts = 0;
    while (static_cast<int>(s.points.size()) < np && attempts++ < 10000)
    {
        const Point2D p{0.5 * coord(rng), 0.5 * coord(rng)};
        if (s.map.strictly_inside_any(p) || !used.insert({p.x, p.y}).second)
            continue;
        s.points.push_back(p);
    }
    return s;
}

} // namespace

TEST(Building, ClockwiseInputIsReorientated)
{
    const Building cw({{0, 0}, {0, 10}, {10, 10}, {10, 0}});
    EXPECT_GT(cw.area(), 0.0);
    double twice_signed = 0;
    for (std::size_t k = 0; k < 4; ++k)
        twice_signed += cw.vertex(k).x * cw.vertex(k + 1).y - cw.vertex(k + 1).x * cw.vertex(k).y;
    EXPECT_DOUBLE_EQ(twice_signed, 200.0);
}

TEST(Building, OutwardNormals)
{
    const Building b = make_rectangle({0, 0}, {10, 5});
    EXPECT_EQ(b.edge_normal(0), (Point2D{0, -1}));
    EXPECT_EQ(b.edge_normal(1), (Point2D{1, 0}));
    EXPECT_EQ(b.edge_normal(2), (Point2D{0, 1}));
    EXPECT_EQ(b.edge_normal(3), (Point2D{-1, 0}));
}

TEST(Building, InvalidPolygonsRejected)
{
    EXPECT_THROW(Building({{0, 0}, {1, 1}}), GeometryError);
    EXPECT_THROW(Building({{0, 0}, {1, 1}, {2, 2}}), GeometryError);
    EXPECT_THROW(Building({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), GeometryError);
    // Bow tie.
    EXPECT_THROW(Building({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), GeometryError);
    EXPECT_THROW(Building({{0, 0}, {std::nan(""), 1}, {1, 1}}), GeometryError);
    EXPECT_THROW(make_rectangle({0, 0}, {0, 5}), GeometryError);
}

TEST(Building, InteriorAndBoundary)
{
    const Building b = make_rectangle({0, 0}, {10, 10});
    EXPECT_TRUE(b.strictly_contains({5, 5}));
    EXPECT_FALSE(b.strictly_contains({0, 5}));
    EXPECT_FALSE(b.strictly_contains({10, 10}));
    EXPECT_FALSE(b.strictly_contains({11, 5}));
    EXPECT_TRUE(b.on_boundary({0, 5}));
    EXPECT_TRUE(b.on_boundary({10, 10}));
    EXPECT_FALSE(b.on_boundary({5, 5}));
}

TEST(Building, ConcavePolygonContainment)
{
    // L shape: notch at the top right.
    const Building l({{0, 0}, {10, 0}, {10, 5}, {5, 5}, {5, 10}, {0, 10}});
    EXPECT_TRUE(l.strictly_contains({2, 8}));
    EXPECT_TRUE(l.strictly_contains({8, 2}));
    EXPECT_FALSE(l.strictly_contains({8, 8}));
}

TEST(ObstacleMap, RejectsBuildingsOutsideBounds)
{
    EXPECT_THROW(ObstacleMap({{0, 0}, {10, 10}}, {make_rectangle({5, 5}, {12, 8})}), GeometryError);
    EXPECT_THROW(ObstacleMap({{0, 0}, {0, 10}}, {}), GeometryError);
    EXPECT_NO_THROW(ObstacleMap({{0, 0}, {10, 10}}, {make_rectangle({0, 0}, {10, 3})}));
}

TEST(Visibility, SingleBoxCases)
{
    const ObstacleMap map = single_box_map();
    EXPECT_FALSE(visible({10, 50}, {90, 50}, map));
    EXPECT_TRUE(visible({10, 10}, {90, 10}, map));
    // Sliding along a face.
    EXPECT_TRUE(visible({40, 10}, {40, 90}, map));
    // Passing exactly through two opposite corners is a diagonal through the interior.
    EXPECT_FALSE(visible({30, 30}, {70, 70}, map));
    // Touching a single corner.
    EXPECT_TRUE(visible({30, 50}, {50, 30}, map));
    // Endpoint on the boundary looking away from the box.
    EXPECT_TRUE(visible({40, 50}, {10, 50}, map));
    // Endpoint on the boundary looking into the box.
    EXPECT_FALSE(visible({40, 50}, {70, 50}, map));
}

TEST(Visibility, EndpointInsideBuildingRejected)
{
    const ObstacleMap map = single_box_map();
    EXPECT_THROW(visible({50, 50}, {10, 10}, map), GeometryError);
    EXPECT_THROW(visible({10, 10}, {10, 10}, map), GeometryError);
}

TEST(Visibility, ConcaveNotchIsOpen)
{
    const Building l({{10, 10}, {30, 10}, {30, 20}, {20, 20}, {20, 30}, {10, 30}});
    const ObstacleMap map({{0, 0}, {40, 40}}, {l});
    EXPECT_TRUE(visible({25, 25}, {35, 35}, map));
    EXPECT_TRUE(visible({25, 25}, {20, 35}, map));
    EXPECT_FALSE(visible({25, 25}, {5, 5}, map));
    // Along the notch's inner faces.
    EXPECT_TRUE(visible({20, 20}, {20, 35}, map));
}

TEST(Visibility, SymmetricAndTranslationInvariant)
{
    std::mt19937_64 rng(21);
    for (int scene = 0; scene < 40; ++scene)
    {
        const RandomScene s = random_scene(rng, 6, 20);
        std::vector<Building> shifted;
        for (const auto &b : s.map.buildings())
        {
            std::vector<Point2D> v;
            for (const auto &p : b.vertices())
                v.push_back(p + Point2D{256, -512});
            shifted.emplace_back(std::move(v));
        }
        const ObstacleMap moved({{256, -512}, {356, -412}}, std::move(shifted));
        for (std::size_t i = 0; i < s.points.size(); ++i)
            for (std::size_t j = i + 1; j < s.points.size(); ++j)
            {
                const Point2D a = s.points[i];
                const Point2D b = s.points[j];
                const bool ab = visible(a, b, s.map);
                EXPECT_EQ(ab, visible(b, a, s.map));
                EXPECT_EQ(ab, visible(a + Point2D{256, -512}, b + Point2D{256, -512}, moved));
            }
    }
}

TEST(Visibility, RemovingAnObstacleNeverHidesAPair)
{
    std::mt19937_64 rng(22);
    for (int scene = 0; scene < 40; ++scene)
    {
        const RandomScene s = random_scene(rng, 6, 20);
        if (s.map.buildings().empty())
            continue;
        std::vector<Building> fewer(s.map.buildings().begin() + 1, s.map.buildings().end());
        const ObstacleMap smaller(s.map.bounds(), fewer);
        for (std::size_t i = 0; i < s.points.size(); ++i)
            for (std::size_t j = i + 1; j < s.points.size(); ++j)
                if (visible(s.points[i], s.points[j], s.map))
                    EXPECT_TRUE(visible(s.points[i], s.points[j], smaller));
    }
}

TEST(Visibility, MatchesClippingOracle)
{
    std::mt19937_64 rng(23);
    for (int scene = 0; scene < 60; ++scene)
    {
        const RandomScene s = random_scene(rng, 8, 30);
        for (std::size_t i = 0; i < s.points.size(); ++i)
            for (std::size_t j = i + 1; j < s.points.size(); ++j)
                EXPECT_EQ(visible(s.points[i], s.points[j], s.map), oracle_visible(s.points[i], s.points[j], s.rects))
                    << "scene " << scene << " pair " << i << "," << j;
    }
}

TEST(ObstacleIndex, AgreesWithPlainQueries)
{
    std::mt19937_64 rng(24);
    for (int scene = 0; scene < 60; ++scene)
    {
        const RandomScene s = random_scene(rng, 8, 30);
        const ObstacleIndex index(s.map);
        for (std::size_t i = 0; i < s.points.size(); ++i)
            for (std::size_t j = i + 1; j < s.points.size(); ++j)
                EXPECT_EQ(index.visible(s.points[i], s.points[j]), visible(s.points[i], s.points[j], s.map));
    }
}

TEST(ObstacleIndex, SegmentsLeavingTheBoundsStillSeeObstacles)
{
    const ObstacleMap map({{0, 0}, {100, 100}}, {make_rectangle({0, 40}, {20, 60})});
    const ObstacleIndex index(map);
    EXPECT_FALSE(index.visible({-50, 50}, {50, 50}));
    EXPECT_TRUE(index.visible({-50, 70}, {50, 70}));
}

TEST(VisibilityGraph, EdgesSortedWithLengths)
{
    const ObstacleMap map = single_box_map();
    const std::vector<Point2D> pts{{10, 50}, {90, 50}, {50, 10}, {50, 90}};
    const VisibilityGraph g = build_visibility_graph(pts, map);
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    ASSERT_EQ(g.edges.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k)
    {
        EXPECT_EQ(g.edges[k].i, expected[k].first);
        EXPECT_EQ(g.edges[k].j, expected[k].second);
        EXPECT_NEAR(g.edges[k].length_m, std::hypot(40.0, 40.0), 1e-12);
    }
}

TEST(VisibilityGraph, EmptyAndFullyOpenMaps)
{
    const ObstacleMap open({{0, 0}, {10, 10}}, {});
    const std::vector<Point2D> pts{{1, 1}, {2, 5}, {9, 9}, {4, 4}};
    EXPECT_EQ(build_visibility_graph(pts, open).edges.size(), 6u);
    EXPECT_TRUE(build_visibility_graph(std::span<const Point2D>{}, open).edges.empty());
}

TEST(VisibilityGraph, RejectsDuplicatesAndInteriorPoints)
{
    const ObstacleMap map = single_box_map();
    const std::vector<Point2D> dup{{1, 1}, {1, 1}};
    EXPECT_THROW(build_visibility_graph(dup, map), GeometryError);
    const std::vector<Point2D> inside{{1, 1}, {50, 50}};
    EXPECT_THROW(build_visibility_graph(inside, map), GeometryError);
}

TEST(CandidatePoints, CornersOffsetOutward)
{
    const ObstacleMap map = single_box_map();
    const auto pts = candidate_points(map, 1.0, false);
    ASSERT_EQ(pts.size(), 4u);
    const double s = std::sqrt(0.5);
    EXPECT_NEAR(pts[0].x, 40 - s, 1e-12);
    EXPECT_NEAR(pts[0].y, 40 - s, 1e-12);
    EXPECT_NEAR(pts[2].x, 60 + s, 1e-12);
    EXPECT_NEAR(pts[2].y, 60 + s, 1e-12);
    for (const auto &p : pts)
        EXPECT_FALSE(map.strictly_inside_any(p));
}

TEST(CandidatePoints, MidpointsInterleaved)
{
    const ObstacleMap map = single_box_map();
    const auto pts = candidate_points(map, 1.0, true);
    ASSERT_EQ(pts.size(), 8u);
    EXPECT_NEAR(pts[1].x, 50.0, 1e-12);
    EXPECT_NEAR(pts[1].y, 39.0, 1e-12);
}

TEST(CandidatePoints, DropsPointsOutsideBoundsOrInsideNeighbours)
{
    // Left box touches the map edge; right box abuts a neighbour.
    const ObstacleMap map({{0, 0}, {100, 100}}, {make_rectangle({0, 10}, {10, 20}), make_rectangle({50, 50}, {60, 60}),
                                                make_rectangle({60, 40}, {70, 70})});
    const auto pts = candidate_points(map, 1.0, false);
    for (const auto &p : pts)
    {
        EXPECT_TRUE(map.bounds().contains(p));
        EXPECT_FALSE(map.strictly_inside_any(p));
    }
    EXPECT_LT(pts.size(), 12u);
}
