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

#include "risbh/backhaul_graph.hpp"

#include <algorithm>
#include <string>

namespace risbh
{

bool ris_serves(const RisSite &site, Point2D p, const ObstacleIndex &index)
{
    return site.faces(p) && index.visible(p, site.position);
}

double graph_direct_pl_db(double d, const RadioParams &p) { return pl_direct_db(std::max(d, p.d0), p); }

double graph_ris_pl_db(double d1, double d2, const RadioParams &p)
{
    const double m2 = static_cast<double>(p.m_surfaces) * p.m_surfaces;
    const double floor_sum = p.d0 / m2;
    if (d1 + d2 < floor_sum)
        return pl_ris_db(0.5 * floor_sum, 0.5 * floor_sum, p);
    return pl_ris_db(d1, d2, p);
}

BackhaulEdge make_direct_edge(std::size_t a, std::size_t b, double length_m, const RadioParams &p)
{
    BackhaulEdge e;
    e.a = a;
    e.b = b;
    e.kind = EdgeKind::direct();
    e.d1_m = length_m;
    e.link = link_budget(graph_direct_pl_db(length_m, p), p);
    return e;
}

BackhaulEdge make_ris_edge(std::size_t a, std::size_t b, std::size_t ris, double d1_m, double d2_m,
                           const RadioParams &p)
{
    BackhaulEdge e;
    e.a = a;
    e.b = b;
    e.kind = EdgeKind::via_ris(ris);
    e.d1_m = d1_m;
    e.d2_m = d2_m;
    e.link = link_budget(graph_ris_pl_db(d1_m, d2_m, p), p);
    return e;
}

AugmentedGraph::AugmentedGraph(std::vector<Point2D> nodes, std::vector<NodeRole> roles, std::size_t mbs_index,
                               std::vector<RisSite> ris_sites, RadioParams radio)
    : nodes_(std::move(nodes)), roles_(std::move(roles)), mbs_(mbs_index), ris_(std::move(ris_sites)),
      radio_(radio), adjacency_(nodes_.size()), served_(ris_.size())
{
    if (roles_.size() != nodes_.size())
        throw std::invalid_argument("node role count does not match node count");
    if (mbs_ >= nodes_.size())
        throw std::invalid_argument("MBS index out of range");
    radio_.validate();
}

std::size_t AugmentedGraph::add_edge(const BackhaulEdge &edge)
{
    if (edge.a >= nodes_.size() || edge.b >= nodes_.size() || edge.a == edge.b)
        throw std::invalid_argument("edge endpoints invalid");
    if (!edge.kind.is_direct() && edge.kind.ris_index >= ris_.size())
        throw std::invalid_argument("edge references unknown RIS " + std::to_string(edge.kind.ris_index));
    edges_.push_back(edge);
    const std::size_t id = edges_.size() - 1;
    adjacency_[edge.a].push_back(id);
    adjacency_[edge.b].push_back(id);
    return id;
}

AugmentedGraph augment_with_ris(const VisibilityGraph &vg, std::size_t mbs_index, std::span<const RisSite> ris,
                                const ObstacleIndex &index, const RadioParams &p)
{
    std::vector<NodeRole> roles(vg.nodes.size(), NodeRole::Candidate);
    if (mbs_index < roles.size())
        roles[mbs_index] = NodeRole::Mbs;
    AugmentedGraph g(vg.nodes, std::move(roles), mbs_index, {ris.begin(), ris.end()}, p);

    for (const auto &e : vg.edges)
        g.add_edge(make_direct_edge(e.i, e.j, e.length_m, p));

    for (std::size_t r = 0; r < ris.size(); ++r)
    {
        std::vector<std::size_t> served;
        for (std::size_t v = 0; v < vg.nodes.size(); ++v)
            if (ris_serves(ris[r], vg.nodes[v], index))
                served.push_back(v);
        for (std::size_t x = 0; x < served.size(); ++x)
        {
            const Point2D a = vg.nodes[served[x]];
            for (std::size_t y = x + 1; y < served.size(); ++y)
            {
                const Point2D b = vg.nodes[served[y]];
                g.add_edge(make_ris_edge(served[x], served[y], r, distance(a, ris[r].position),
                                         distance(ris[r].position, b), p));
            }
        }
        g.set_ris_served(r, std::move(served));
    }
    return g;
}

AugmentedGraph augment_with_ris(const VisibilityGraph &vg, std::size_t mbs_index, std::span<const RisSite> ris,
                                const ObstacleMap &map, const RadioParams &p)
{
    const ObstacleIndex index(map);
    return augment_with_ris(vg, mbs_index, ris, index, p);
}

std::vector<BackhaulEdge> probe_edges(const AugmentedGraph &g, Point2D where, const ObstacleIndex &index,
                                      const std::vector<bool> *only)
{
    const std::size_t probe = g.node_count();
    const RadioParams &p = g.radio();
    auto wanted = [&](std::size_t v) { return only == nullptr || (*only)[v]; };

    std::vector<BackhaulEdge> out;
    for (std::size_t v = 0; v < g.node_count(); ++v)
    {
        if (!wanted(v))
            continue;
        const double d = distance(g.node(v), where);
        if (d <= kGeomEps)
            throw GeometryError("probe coincides with node " + std::to_string(v));
        if (index.visible(g.node(v), where))
            out.push_back(make_direct_edge(v, probe, d, p));
    }
    for (std::size_t r = 0; r < g.ris_sites().size(); ++r)
    {
        const RisSite &site = g.ris_sites()[r];
        if (!ris_serves(site, where, index))
            continue;
        const double d2 = distance(site.position, where);
        for (const std::size_t v : g.ris_served(r))
            if (wanted(v))
                out.push_back(make_ris_edge(v, probe, r, distance(g.node(v), site.position), d2, p));
    }
    return out;
}

AugmentedGraph with_probe(const AugmentedGraph &g, Point2D where, const ObstacleIndex &index)
{
    const auto extra = probe_edges(g, where, index);

    std::vector<Point2D> nodes = g.nodes();
    nodes.push_back(where);
    std::vector<NodeRole> roles;
    roles.reserve(nodes.size());
    for (std::size_t v = 0; v < g.node_count(); ++v)
        roles.push_back(g.role(v));
    roles.push_back(NodeRole::Probe);

    AugmentedGraph out(std::move(nodes), std::move(roles), g.mbs_index(), g.ris_sites(), g.radio());
    for (const auto &e : g.edges())
        out.add_edge(e);
    for (const auto &e : extra)
        out.add_edge(e);
    for (std::size_t r = 0; r < g.ris_sites().size(); ++r)
    {
        auto served = g.ris_served(r);
        if (ris_serves(g.ris_sites()[r], where, index))
            served.push_back(g.node_count());
        out.set_ris_served(r, std::move(served));
    }
    return out;
}

} // namespace risbh
