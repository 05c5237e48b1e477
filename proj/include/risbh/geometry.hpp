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

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace risbh
{

// Tolerance (meters) applied to signed point-to-line distances in all predicates.
inline constexpr double kGeomEps = 1e-9;

class GeometryError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct Point2D
{
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D &, const Point2D &) = default;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }

inline double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2D a) { return std::hypot(a.x, a.y); }
inline double distance(Point2D a, Point2D b) { return norm(a - b); }

inline bool is_finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Box
{
    Point2D min;
    Point2D max;

    [[nodiscard]] double width() const { return max.x - min.x; }
    [[nodiscard]] double height() const { return max.y - min.y; }
    [[nodiscard]] Point2D center() const { return {0.5 * (min.x + max.x), 0.5 * (min.y + max.y)}; }
    [[nodiscard]] bool contains(Point2D p, double tol = kGeomEps) const
    {
        return p.x >= min.x - tol && p.x <= max.x + tol && p.y >= min.y - tol && p.y <= max.y + tol;
    }
    [[nodiscard]] bool overlaps(const Box &o, double tol = kGeomEps) const
    {
        return min.x <= o.max.x + tol && o.min.x <= max.x + tol && min.y <= o.max.y + tol && o.min.y <= max.y + tol;
    }

    friend bool operator==(const Box &, const Box &) = default;
};

// Simple polygon obstacle. Vertices are stored counter-clockwise; a clockwise
// input ring is reversed on construction.
class Building
{
  public:
    explicit Building(std::vector<Point2D> vertices);

    [[nodiscard]] const std::vector<Point2D> &vertices() const { return vertices_; }
    [[nodiscard]] std::size_t size() const { return vertices_.size(); }
    [[nodiscard]] Point2D vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    [[nodiscard]] const Box &bbox() const { return bbox_; }
    [[nodiscard]] double area() const;

    // Outward unit normal of edge (i, i+1).
    [[nodiscard]] Point2D edge_normal(std::size_t i) const;

    [[nodiscard]] bool on_boundary(Point2D p, double tol = kGeomEps) const;
    [[nodiscard]] bool strictly_contains(Point2D p) const;

    friend bool operator==(const Building &a, const Building &b) { return a.vertices_ == b.vertices_; }

  private:
    std::vector<Point2D> vertices_;
    Box bbox_;
};

Building make_rectangle(Point2D min, Point2D max);

class ObstacleMap
{
  public:
    ObstacleMap() = default;
    ObstacleMap(Box bounds, std::vector<Building> buildings);

    [[nodiscard]] const Box &bounds() const { return bounds_; }
    [[nodiscard]] const std::vector<Building> &buildings() const { return buildings_; }

    // Index of the first building strictly containing p, or -1.
    [[nodiscard]] int building_containing(Point2D p) const;
    [[nodiscard]] bool strictly_inside_any(Point2D p) const { return building_containing(p) >= 0; }

    friend bool operator==(const ObstacleMap &, const ObstacleMap &) = default;

  private:
    Box bounds_{};
    std::vector<Building> buildings_;
};

// Signed distance of c from the directed line a->b (positive on the left).
double signed_line_distance(Point2D a, Point2D b, Point2D c);

// True iff the open segment (a,b) properly crosses an edge of `building` or
// runs through its interior. Touching a vertex or sliding along an edge does not block.
bool segment_blocked_by(Point2D a, Point2D b, const Building &building);

bool segment_blocked(Point2D a, Point2D b, const ObstacleMap &map);

// Line of sight between two points outside every building interior. Symmetric.
bool visible(Point2D a, Point2D b, const ObstacleMap &map);

struct VisibilityEdge
{
    std::size_t i = 0;
    std::size_t j = 0; // i < j
    double length_m = 0.0;

    friend bool operator==(const VisibilityEdge &, const VisibilityEdge &) = default;
};

struct VisibilityGraph
{
    std::vector<Point2D> nodes;
    std::vector<VisibilityEdge> edges; // sorted by (i, j)
};

VisibilityGraph build_visibility_graph(std::span<const Point2D> points, const ObstacleMap &map);

// Building corners pushed outward by `offset` along the exterior bisector,
// optionally with edge midpoints pushed along the edge normal.
std::vector<Point2D> candidate_points(const ObstacleMap &map, double offset, bool include_edge_midpoints);

} // namespace risbh
