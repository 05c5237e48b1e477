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

#include "risbh/geometry.hpp"

#include "risbh/obstacle_index.hpp"

#include <algorithm>
#include <string>

namespace risbh
{

namespace
{

double ring_signed_area(const std::vector<Point2D> &ring)
{
    double twice = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i)
        twice += cross(ring[i], ring[(i + 1) % ring.size()]);
    return 0.5 * twice;
}

double point_segment_distance(Point2D p, Point2D a, Point2D b)
{
    const Point2D ab = b - a;
    const double l2 = dot(ab, ab);
    if (l2 == 0.0)
        return distance(p, a);
    const double t = std::clamp(dot(p - a, ab) / l2, 0.0, 1.0);
    return distance(p, a + t * ab);
}

// Closed-segment intersection test used only for polygon validation.
bool segments_touch(Point2D a, Point2D b, Point2D c, Point2D d)
{
    const double d1 = signed_line_distance(a, b, c);
    const double d2 = signed_line_distance(a, b, d);
    const double d3 = signed_line_distance(c, d, a);
    const double d4 = signed_line_distance(c, d, b);
    if (((d1 > kGeomEps && d2 < -kGeomEps) || (d1 < -kGeomEps && d2 > kGeomEps)) &&
        ((d3 > kGeomEps && d4 < -kGeomEps) || (d3 < -kGeomEps && d4 > kGeomEps)))
        return true;
    return point_segment_distance(c, a, b) <= kGeomEps || point_segment_distance(d, a, b) <= kGeomEps ||
           point_segment_distance(a, c, d) <= kGeomEps || point_segment_distance(b, c, d) <= kGeomEps;
}

} // namespace

double signed_line_distance(Point2D a, Point2D b, Point2D c)
{
    const Point2D ab = b - a;
    const double len = norm(ab);
    if (len == 0.0)
        return distance(a, c);
    return cross(ab, c - a) / len;
}

Building::Building(std::vector<Point2D> vertices) : vertices_(std::move(vertices))
{
    if (vertices_.size() < 3)
        throw GeometryError("building needs at least 3 vertices, got " + std::to_string(vertices_.size()));
    for (const auto &v : vertices_)
        if (!is_finite(v))
            throw GeometryError("building vertex is not finite");

    const double a = ring_signed_area(vertices_);
    if (std::abs(a) <= kGeomEps)
        throw GeometryError("building has zero area");
    if (a < 0.0)
        std::reverse(vertices_.begin(), vertices_.end());

    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        if (distance(vertices_[i], vertices_[(i + 1) % n]) <= kGeomEps)
            throw GeometryError("building has a repeated vertex");
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_touch(vertices_[i], vertices_[(i + 1) % n], vertices_[j], vertices_[(j + 1) % n]))
                throw GeometryError("building outline self-intersects");
        }
    }

    bbox_ = {vertices_[0], vertices_[0]};
    for (const auto &v : vertices_)
    {
        bbox_.min = {std::min(bbox_.min.x, v.x), std::min(bbox_.min.y, v.y)};
        bbox_.max = {std::max(bbox_.max.x, v.x), std::max(bbox_.max.y, v.y)};
    }
}

double Building::area() const { return ring_signed_area(vertices_); }

Point2D Building::edge_normal(std::size_t i) const
{
    const Point2D e = vertex(i + 1) - vertex(i);
    const double len = norm(e);
    return {e.y / len, -e.x / len};
}

bool Building::on_boundary(Point2D p, double tol) const
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (point_segment_distance(p, vertex(i), vertex(i + 1)) <= tol)
            return true;
    return false;
}

bool Building::strictly_contains(Point2D p) const
{
    if (!bbox_.contains(p))
        return false;
    if (on_boundary(p))
        return false;
    bool inside = false;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++)
    {
        const Point2D vi = vertices_[i];
        const Point2D vj = vertices_[j];
        if ((vi.y > p.y) != (vj.y > p.y))
        {
            const double x_cross = vj.x + (p.y - vj.y) * (vi.x - vj.x) / (vi.y - vj.y);
            if (p.x < x_cross)
                inside = !inside;
        }
    }
    return inside;
}

Building make_rectangle(Point2D min, Point2D max)
{
    return Building({min, {max.x, min.y}, max, {min.x, max.y}});
}

ObstacleMap::ObstacleMap(Box bounds, std::vector<Building> buildings)
    : bounds_(bounds), buildings_(std::move(buildings))
{
    if (!(bounds_.width() > 0.0) || !(bounds_.height() > 0.0))
        throw GeometryError("map bounds must have positive extent");
    for (std::size_t i = 0; i < buildings_.size(); ++i)
    {
        const Box &b = buildings_[i].bbox();
        if (!bounds_.contains(b.min) || !bounds_.contains(b.max))
            throw GeometryError("building " + std::to_string(i) + " lies outside the map bounds");
    }
}

int ObstacleMap::building_containing(Point2D p) const
{
    for (std::size_t i = 0; i < buildings_.size(); ++i)
        if (buildings_[i].strictly_contains(p))
            return static_cast<int>(i);
    return -1;
}

bool segment_blocked_by(Point2D a, Point2D b, const Building &building)
{
    const Box seg_box{{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
    if (!seg_box.overlaps(building.bbox()))
        return false;

    const Point2D ab = b - a;
    const double len = norm(ab);
    const auto &ring = building.vertices();
    const std::size_t n = ring.size();

    // Proper crossings: edge endpoints strictly on both sides of the segment
    // line and segment endpoints strictly on both sides of the edge line.
    for (std::size_t i = 0; i < n; ++i)
    {
        const Point2D p = ring[i];
        const Point2D q = ring[(i + 1) % n];
        const double dp = cross(ab, p - a) / len;
        const double dq = cross(ab, q - a) / len;
        if (!((dp > kGeomEps && dq < -kGeomEps) || (dp < -kGeomEps && dq > kGeomEps)))
            continue;
        const double da = signed_line_distance(p, q, a);
        const double db = signed_line_distance(p, q, b);
        if ((da > kGeomEps && db < -kGeomEps) || (da < -kGeomEps && db > kGeomEps))
            return true;
    }

    // No proper crossing: the segment meets the boundary only at vertices,
    // its own endpoints, or along collinear edges. Split it at those contacts
    // and probe each piece once.
    std::vector<double> cuts{0.0, 1.0};
    for (const Point2D v : ring)
    {
        if (std::abs(cross(ab, v - a) / len) > kGeomEps)
            continue;
        const double t = dot(v - a, ab) / (len * len);
        if (t > 0.0 && t < 1.0)
            cuts.push_back(t);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
    {
        if ((cuts[k + 1] - cuts[k]) * len <= kGeomEps)
            continue;
        const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
        if (building.strictly_contains(a + mid * ab))
            return true;
    }
    return false;
}

bool segment_blocked(Point2D a, Point2D b, const ObstacleMap &map)
{
    if (distance(a, b) <= kGeomEps)
        throw GeometryError("segment endpoints coincide");
    for (const auto &building : map.buildings())
        if (segment_blocked_by(a, b, building))
            return true;
    return false;
}

bool visible(Point2D a, Point2D b, const ObstacleMap &map)
{
    if (map.strictly_inside_any(a) || map.strictly_inside_any(b))
        throw GeometryError("visibility endpoint lies inside a building");
    return !segment_blocked(a, b, map);
}

VisibilityGraph build_visibility_graph(std::span<const Point2D> points, const ObstacleMap &map)
{
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (!is_finite(points[i]))
            throw GeometryError("point " + std::to_string(i) + " is not finite");
        if (map.strictly_inside_any(points[i]))
            throw GeometryError("point " + std::to_string(i) + " lies inside a building");
    }
    // Duplicate detection on a sorted copy.
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        return points[l].x < points[r].x || (points[l].x == points[r].x && points[l].y < points[r].y);
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
    {
        for (std::size_t m = k + 1; m < order.size(); ++m)
        {
            if (points[order[m]].x - points[order[k]].x > kGeomEps)
                break;
            if (distance(points[order[k]], points[order[m]]) <= kGeomEps)
                throw GeometryError("duplicate points " + std::to_string(std::min(order[k], order[m])) + " and " +
                                    std::to_string(std::max(order[k], order[m])));
        }
    }

    const ObstacleIndex index(map);
    VisibilityGraph vg;
    vg.nodes.assign(points.begin(), points.end());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!index.segment_blocked(points[i], points[j]))
                vg.edges.push_back({i, j, distance(points[i], points[j])});
    return vg;
}

std::vector<Point2D> candidate_points(const ObstacleMap &map, double offset, bool include_edge_midpoints)
{
    if (!(offset > 0.0))
        throw GeometryError("candidate offset must be positive");

    std::vector<Point2D> out;
    auto accept = [&](Point2D p) {
        if (!map.bounds().contains(p, 0.0))
            return;
        for (const auto &b : map.buildings())
            if (b.strictly_contains(p) || b.on_boundary(p))
                return;
        for (const auto &q : out)
            if (distance(p, q) <= kGeomEps)
                return;
        out.push_back(p);
    };

    for (const auto &building : map.buildings())
    {
        const std::size_t n = building.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            const Point2D bis = building.edge_normal(i + n - 1) + building.edge_normal(i);
            const double len = norm(bis);
            if (len > 1e-12)
                accept(building.vertex(i) + (offset / len) * bis);
            if (include_edge_midpoints)
            {
                const Point2D mid = 0.5 * (building.vertex(i) + building.vertex(i + 1));
                accept(mid + offset * building.edge_normal(i));
            }
        }
    }
    return out;
}

} // namespace risbh
