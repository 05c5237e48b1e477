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
#include "risbh/obstacle_index.hpp"
#include "risbh/radio.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace risbh
{

// Reflector on a building facade. Serves only points strictly in front of it.
struct RisSite
{
    Point2D position;
    Point2D normal; // outward unit facade normal

    [[nodiscard]] bool faces(Point2D p) const { return dot(p - position, normal) > kGeomEps; }

    friend bool operator==(const RisSite &, const RisSite &) = default;
};

// Front-side test plus line of sight to the reflector.
bool ris_serves(const RisSite &site, Point2D p, const ObstacleIndex &index);

struct EdgeKind
{
    enum class Type : std::uint8_t
    {
        Direct,
        ViaRis,
    };

    Type type = Type::Direct;
    std::size_t ris_index = 0; // meaningful for ViaRis only

    static EdgeKind direct() { return {}; }
    static EdgeKind via_ris(std::size_t r) { return {Type::ViaRis, r}; }
    [[nodiscard]] bool is_direct() const { return type == Type::Direct; }

    friend bool operator==(const EdgeKind &, const EdgeKind &) = default;
};

enum class NodeRole : std::uint8_t
{
    Mbs,
    Candidate,
    Probe,
};

struct BackhaulEdge
{
    std::size_t a = 0;
    std::size_t b = 0;
    EdgeKind kind;
    double d1_m = 0.0; // direct length, or transmitter-to-RIS leg
    double d2_m = 0.0; // RIS-to-receiver leg, 0 for direct edges
    LinkBudget link;

    [[nodiscard]] std::size_t other(std::size_t v) const { return v == a ? b : a; }
};

// Path loss used for graph edges. Node pairs closer than the reference
// distance are evaluated at the reference distance.
double graph_direct_pl_db(double d, const RadioParams &p);
double graph_ris_pl_db(double d1, double d2, const RadioParams &p);

BackhaulEdge make_direct_edge(std::size_t a, std::size_t b, double length_m, const RadioParams &p);
BackhaulEdge make_ris_edge(std::size_t a, std::size_t b, std::size_t ris, double d1_m, double d2_m,
                           const RadioParams &p);

// Visibility graph plus RIS virtual links (a multigraph: a Direct edge and any
// number of ViaRis edges may join the same pair).
class AugmentedGraph
{
  public:
    AugmentedGraph(std::vector<Point2D> nodes, std::vector<NodeRole> roles, std::size_t mbs_index,
                   std::vector<RisSite> ris_sites, RadioParams radio);

    std::size_t add_edge(const BackhaulEdge &edge);

    [[nodiscard]] std::size_t node_count() const { return nodes_.size(); }
    [[nodiscard]] const std::vector<Point2D> &nodes() const { return nodes_; }
    [[nodiscard]] Point2D node(std::size_t i) const { return nodes_[i]; }
    [[nodiscard]] NodeRole role(std::size_t i) const { return roles_[i]; }
    [[nodiscard]] std::size_t mbs_index() const { return mbs_; }
    [[nodiscard]] const std::vector<BackhaulEdge> &edges() const { return edges_; }
    [[nodiscard]] const BackhaulEdge &edge(std::size_t e) const { return edges_[e]; }
    [[nodiscard]] std::span<const std::size_t> incident(std::size_t v) const { return adjacency_[v]; }
    [[nodiscard]] const std::vector<RisSite> &ris_sites() const { return ris_; }
    [[nodiscard]] const RadioParams &radio() const { return radio_; }

    // Nodes served by RIS r, ascending.
    [[nodiscard]] const std::vector<std::size_t> &ris_served(std::size_t r) const { return served_[r]; }
    void set_ris_served(std::size_t r, std::vector<std::size_t> nodes) { served_[r] = std::move(nodes); }

  private:
    std::vector<Point2D> nodes_;
    std::vector<NodeRole> roles_;
    std::size_t mbs_;
    std::vector<RisSite> ris_;
    RadioParams radio_;
    std::vector<BackhaulEdge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::vector<std::size_t>> served_;
};

// Attaches link budgets to every visibility edge and adds one ViaRis edge per
// RIS per pair of nodes that RIS serves. Node `mbs_index` gets role Mbs, the
// rest Candidate.
AugmentedGraph augment_with_ris(const VisibilityGraph &vg, std::size_t mbs_index, std::span<const RisSite> ris,
                                const ObstacleIndex &index, const RadioParams &p);
AugmentedGraph augment_with_ris(const VisibilityGraph &vg, std::size_t mbs_index, std::span<const RisSite> ris,
                                const ObstacleMap &map, const RadioParams &p);

// Edges that would join a probe at `where` (virtual index g.node_count()) to
// the graph. When `only` is given, graph nodes with (*only)[v] == false are skipped.
std::vector<BackhaulEdge> probe_edges(const AugmentedGraph &g, Point2D where, const ObstacleIndex &index,
                                      const std::vector<bool> *only = nullptr);

// Copy of g with a probe node appended at `where`.
AugmentedGraph with_probe(const AugmentedGraph &g, Point2D where, const ObstacleIndex &index);

} // namespace risbh
