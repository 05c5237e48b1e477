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

// Reference implementations used by the tests. They are written directly from
// the model formulas and textbook algorithms and share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace oracle
{

// Default 38 GHz link parameters, restated here on purpose.
inline constexpr double kPlRef = 39.0;
inline constexpr double kD0 = 5.0;
inline constexpr double kExponent = 2.13;
inline constexpr double kSurfaces = 3.0;
inline constexpr double kBeamGain = 15.0;
inline constexpr double kTxDbm = 20.0;
inline constexpr double kNoiseDbm = -131.0;
inline constexpr double kEta = 0.82;
inline constexpr double kBandwidth = 18.72e6;

inline double pl_direct(double d) { return kPlRef + 10.0 * kExponent * std::log10(d / kD0); }

inline double pl_ris(double d1, double d2)
{
    return kPlRef + 10.0 * kExponent * std::log10(kSurfaces * kSurfaces * (d1 + d2) / kD0) - kBeamGain;
}

inline double snr(double pl) { return kTxDbm - pl - kNoiseDbm; }

inline double rate(double snr_db) { return kEta * kBandwidth * std::log2(1.0 + std::pow(10.0, snr_db / 10.0)); }

// Longest direct hop / RIS leg sum whose path loss stays within max_pl.
inline double direct_range(double max_pl) { return kD0 * std::pow(10.0, (max_pl - kPlRef) / (10.0 * kExponent)); }
inline double ris_range(double max_pl)
{
    return kD0 / (kSurfaces * kSurfaces) * std::pow(10.0, (max_pl - kPlRef + kBeamGain) / (10.0 * kExponent));
}

struct Rect
{
    double x0, y0, x1, y1;
};

// Liang-Barsky clip of segment (ax,ay)-(bx,by) against the rectangle. The
// segment is blocked when the clipped part has positive length and its
// midpoint lies in the open interior (so grazing a face or a corner is free).
inline bool rect_blocks(double ax, double ay, double bx, double by, const Rect &r)
{
    const double dx = bx - ax;
    const double dy = by - ay;
    double t0 = 0.0;
    double t1 = 1.0;
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {ax - r.x0, r.x1 - ax, ay - r.y0, r.y1 - ay};
    for (int k = 0; k < 4; ++k)
    {
        if (p[k] == 0.0)
        {
            if (q[k] < 0.0)
                return false;
            continue;
        }
        const double t = q[k] / p[k];
        if (p[k] < 0.0)
            t0 = std::max(t0, t);
        else
            t1 = std::min(t1, t);
        if (t0 > t1)
            return false;
    }
    if (t1 - t0 <= 0.0)
        return false;
    const double tm = 0.5 * (t0 + t1);
    const double mx = ax + tm * dx;
    const double my = ay + tm * dy;
    return mx > r.x0 && mx < r.x1 && my > r.y0 && my < r.y1;
}

struct Edge
{
    std::size_t a, b;
    double cost; // +inf when the edge is unusable
};

struct Best
{
    double cost = std::numeric_limits<double>::infinity();
    std::optional<int> min_hops; // fewest edges over usable simple paths
};

// Exhaustive search over simple paths from `src`. Parallel edges are distinct
// choices. Paths longer than max_hops are not considered.
inline std::vector<Best> enumerate_simple_paths(std::size_t n, const std::vector<Edge> &edges, std::size_t src,
                                                int max_hops)
{
    std::vector<Best> best(n);
    std::vector<bool> on_path(n, false);
    std::function<void(std::size_t, double, int)> dfs = [&](std::size_t v, double cost, int hops) {
        if (cost < best[v].cost)
            best[v].cost = cost;
        if (!best[v].min_hops || hops < *best[v].min_hops)
            best[v].min_hops = hops;
        if (hops == max_hops)
            return;
        on_path[v] = true;
        for (const Edge &e : edges)
        {
            if (!std::isfinite(e.cost))
                continue;
            std::size_t w;
            if (e.a == v)
                w = e.b;
            else if (e.b == v)
                w = e.a;
            else
                continue;
            if (!on_path[w])
                dfs(w, cost + e.cost, hops + 1);
        }
        on_path[v] = false;
    };
    dfs(src, 0.0, 0);
    return best;
}

} // namespace oracle
