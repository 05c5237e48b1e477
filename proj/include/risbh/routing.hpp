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

#include "risbh/backhaul_graph.hpp"

#include <limits>
#include <optional>
#include <vector>

namespace risbh
{

// Cost assigned to links that miss the rate requirement. Absorbing under
// addition, so any path using such a link has infinite cost.
inline constexpr double kInfeasibleCost = std::numeric_limits<double>::infinity();

// Per-hop requirement. A link is usable iff its SNR reaches snr_min_db; the
// rate form is converted through the inverse Shannon mapping.
struct LinkRequirement
{
    double snr_min_db = -std::numeric_limits<double>::infinity();

    static LinkRequirement from_snr_db(double snr) { return {snr}; }
    static LinkRequirement from_rate_bps(double c_min_bps, const RadioParams &p)
    {
        return {min_snr_for_rate_db(c_min_bps, p)};
    }

    [[nodiscard]] double c_min_bps(const RadioParams &p) const { return rate_bps(snr_min_db, p); }
    [[nodiscard]] bool admits(const BackhaulEdge &e) const { return e.link.snr_db >= snr_min_db; }
};

// PL + penalty for usable links, kInfeasibleCost otherwise.
double edge_cost(const BackhaulEdge &edge, const LinkRequirement &req, double penalty_db);

struct PathResult
{
    std::vector<std::size_t> node_sequence; // starts at the MBS
    std::vector<std::size_t> edge_ids;
    std::vector<EdgeKind> edge_kinds;
    int hop_count = 0;
    double bottleneck_rate_bps = std::numeric_limits<double>::infinity();
    double total_cost = 0.0;
};

// Minimum per-edge rate along the path; +inf for the zero-hop path.
double bottleneck_rate(const PathResult &path, const AugmentedGraph &g);

// Usable neighbours of every node, one entry per neighbour. Among parallel
// links the cheapest wins; exact cost ties prefer Direct, then the lower RIS index.
struct FeasibleAdjacency
{
    struct Arc
    {
        std::size_t to;
        std::size_t edge;
        double cost;
    };

    FeasibleAdjacency(const AugmentedGraph &g, const LinkRequirement &req, double penalty_db);

    std::vector<std::vector<Arc>> arcs;
};

// Single-source routes from the MBS minimizing (total cost, hop count,
// node-index sequence) lexicographically. Dijkstra without hop limit, a
// hop-layered relaxation when a budget is given.
class RouteTree
{
  public:
    RouteTree(const AugmentedGraph &g, const LinkRequirement &req, double penalty_db,
              std::optional<int> max_hops = std::nullopt);

    [[nodiscard]] bool reachable(std::size_t dst) const;
    [[nodiscard]] std::optional<PathResult> path_to(std::size_t dst) const;

    // Best route to a probe given its candidate attachment edges (edge.a is the
    // graph node, edge.b the probe). Same ordering and tie rules as path_to()
    // on the graph with the probe appended.
    struct ProbeRoute
    {
        PathResult path;      // node_sequence ends with the probe index, edge_ids refer to `attach`
        double bottleneck_rate_bps;
    };
    [[nodiscard]] std::optional<ProbeRoute> route_probe(std::span<const BackhaulEdge> attach) const;

    // Nodes whose best route can still be extended by one hop within the budget.
    [[nodiscard]] std::vector<bool> extendable() const;

  private:
    struct Label
    {
        double cost = kInfeasibleCost;
        std::size_t pred = npos;
        std::size_t pred_edge = npos;
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    void run_dijkstra();
    void run_layered();
    [[nodiscard]] std::vector<std::size_t> sequence(std::size_t layer, std::size_t v) const;
    [[nodiscard]] int compare_sequences(std::size_t layer_a, std::size_t a, std::size_t layer_b, std::size_t b) const;
    [[nodiscard]] PathResult build_path(std::size_t layer, std::size_t dst) const;
    [[nodiscard]] std::optional<std::size_t> best_layer(std::size_t dst) const;

    const AugmentedGraph *g_;
    LinkRequirement req_;
    double penalty_;
    std::optional<int> max_hops_;
    FeasibleAdjacency adj_;
    // Dijkstra: one layer with hops_[v]. Layered: labels_[h][v] is the best walk of exactly h edges.
    std::vector<std::vector<Label>> labels_;
    std::vector<int> hops_;
};

std::optional<PathResult> shortest_path(const AugmentedGraph &g, std::size_t dst, const LinkRequirement &req,
                                        double penalty_db, std::optional<int> max_hops = std::nullopt);

// Minimum number of usable edges from the MBS to each node; nullopt when it
// exceeds n_max or no all-usable path exists.
using HopMap = std::vector<std::optional<int>>;
HopMap min_hop_map(const AugmentedGraph &g, const LinkRequirement &req, int n_max);

// Candidate nodes reachable within n hops under the SNR requirement, ascending.
std::vector<std::size_t> reachable_set(const AugmentedGraph &g, int n, double snr_min_db);

struct CoverageRow
{
    double snr_min_db = 0.0;
    int n = 0;
    bool with_ris = false;
    std::size_t reached = 0;
    std::size_t total = 0;

    friend bool operator==(const CoverageRow &, const CoverageRow &) = default;
};

// Rows ordered by snr list order, then variant (without RIS first), then n.
std::vector<CoverageRow> coverage_curve(const AugmentedGraph &without_ris, const AugmentedGraph &with_ris, int n_max,
                                        std::span<const double> snr_min_list);

} // namespace risbh
