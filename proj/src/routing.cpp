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

#include "risbh/routing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace risbh
{

namespace
{

// Preference between two usable parallel links joining the same pair.
bool prefer_link(double cost_new, const BackhaulEdge &e_new, std::size_t id_new, double cost_old,
                 const BackhaulEdge &e_old, std::size_t id_old)
{
    if (cost_new != cost_old)
        return cost_new < cost_old;
    if (e_new.kind.is_direct() != e_old.kind.is_direct())
        return e_new.kind.is_direct();
    if (e_new.kind.ris_index != e_old.kind.ris_index)
        return e_new.kind.ris_index < e_old.kind.ris_index;
    return id_new < id_old;
}

void check_cost(double c)
{
    if (!(c > 0.0))
        throw std::domain_error("usable link has non-positive routing cost; increase the hop penalty");
}

} // namespace

double edge_cost(const BackhaulEdge &edge, const LinkRequirement &req, double penalty_db)
{
    if (!(penalty_db >= 0.0))
        throw std::invalid_argument("hop penalty must be non-negative");
    if (!req.admits(edge))
        return kInfeasibleCost;
    return edge.link.pl_db + penalty_db;
}

double bottleneck_rate(const PathResult &path, const AugmentedGraph &g)
{
    double r = std::numeric_limits<double>::infinity();
    for (const std::size_t e : path.edge_ids)
        r = std::min(r, g.edge(e).link.rate_bps);
    return r;
}

FeasibleAdjacency::FeasibleAdjacency(const AugmentedGraph &g, const LinkRequirement &req, double penalty_db)
    : arcs(g.node_count())
{
    for (std::size_t v = 0; v < g.node_count(); ++v)
    {
        auto &out = arcs[v];
        for (const std::size_t id : g.incident(v))
        {
            const BackhaulEdge &e = g.edge(id);
            const double c = edge_cost(e, req, penalty_db);
            if (c == kInfeasibleCost)
                continue;
            check_cost(c);
            const std::size_t to = e.other(v);
            auto it = std::find_if(out.begin(), out.end(), [&](const Arc &a) { return a.to == to; });
            if (it == out.end())
                out.push_back({to, id, c});
            else if (prefer_link(c, e, id, it->cost, g.edge(it->edge), it->edge))
                *it = {to, id, c};
        }
        std::sort(out.begin(), out.end(), [](const Arc &l, const Arc &r) { return l.to < r.to; });
    }
}

RouteTree::RouteTree(const AugmentedGraph &g, const LinkRequirement &req, double penalty_db,
                     std::optional<int> max_hops)
    : g_(&g), req_(req), penalty_(penalty_db), max_hops_(max_hops), adj_(g, req, penalty_db)
{
    if (max_hops_ && *max_hops_ < 0)
        throw std::invalid_argument("hop budget must be non-negative");
    if (max_hops_)
        run_layered();
    else
        run_dijkstra();
}

void RouteTree::run_dijkstra()
{
    const std::size_t n = g_->node_count();
    labels_.assign(1, std::vector<Label>(n));
    hops_.assign(n, -1);
    auto &lab = labels_[0];
    const std::size_t src = g_->mbs_index();
    lab[src].cost = 0.0;
    hops_[src] = 0;

    using Key = std::tuple<double, int, std::size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
    pq.emplace(0.0, 0, src);
    std::vector<bool> done(n, false);

    while (!pq.empty())
    {
        const auto [c, h, v] = pq.top();
        pq.pop();
        if (done[v] || c != lab[v].cost || h != hops_[v])
            continue;
        done[v] = true;
        for (const auto &arc : adj_.arcs[v])
        {
            if (done[arc.to])
                continue;
            const double nc = c + arc.cost;
            const int nh = h + 1;
            Label &cur = lab[arc.to];
            bool better = nc < cur.cost;
            if (!better && nc == cur.cost)
            {
                if (nh != hops_[arc.to])
                    better = nh < hops_[arc.to];
                else
                    better = compare_sequences(0, v, 0, cur.pred) < 0;
            }
            if (better)
            {
                cur = {nc, v, arc.edge};
                hops_[arc.to] = nh;
                pq.emplace(nc, nh, arc.to);
            }
        }
    }
}

void RouteTree::run_layered()
{
    const std::size_t n = g_->node_count();
    const int budget = *max_hops_;
    labels_.assign(static_cast<std::size_t>(budget) + 1, std::vector<Label>(n));
    labels_[0][g_->mbs_index()].cost = 0.0;

    for (int h = 1; h <= budget; ++h)
    {
        const auto &prev = labels_[h - 1];
        auto &layer = labels_[h];
        bool any = false;
        for (std::size_t v = 0; v < n; ++v)
        {
            Label &cur = layer[v];
            for (const auto &arc : adj_.arcs[v])
            {
                const std::size_t u = arc.to;
                if (prev[u].cost == kInfeasibleCost)
                    continue;
                const double nc = prev[u].cost + arc.cost;
                bool better = nc < cur.cost;
                if (!better && nc == cur.cost)
                    better = compare_sequences(h - 1, u, h - 1, cur.pred) < 0;
                if (better)
                    cur = {nc, u, arc.edge};
            }
            any = any || cur.cost != kInfeasibleCost;
        }
        if (!any)
        {
            labels_.resize(static_cast<std::size_t>(h));
            break;
        }
    }
}

std::vector<std::size_t> RouteTree::sequence(std::size_t layer, std::size_t v) const
{
    std::vector<std::size_t> seq;
    if (!max_hops_)
    {
        for (std::size_t x = v; x != npos; x = labels_[0][x].pred)
            seq.push_back(x);
    }
    else
    {
        std::size_t x = v;
        for (std::size_t h = layer;; --h)
        {
            seq.push_back(x);
            if (h == 0)
                break;
            x = labels_[h][x].pred;
        }
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

int RouteTree::compare_sequences(std::size_t layer_a, std::size_t a, std::size_t layer_b, std::size_t b) const
{
    if (a == b && layer_a == layer_b)
        return 0;
    const auto sa = sequence(layer_a, a);
    const auto sb = sequence(layer_b, b);
    if (sa < sb)
        return -1;
    return sb < sa ? 1 : 0;
}

std::optional<std::size_t> RouteTree::best_layer(std::size_t dst) const
{
    if (!max_hops_)
        return hops_[dst] >= 0 ? std::optional<std::size_t>(0) : std::nullopt;
    std::optional<std::size_t> best;
    for (std::size_t h = 0; h < labels_.size(); ++h)
        if (labels_[h][dst].cost < (best ? labels_[*best][dst].cost : kInfeasibleCost))
            best = h;
    return best;
}

bool RouteTree::reachable(std::size_t dst) const { return best_layer(dst).has_value(); }

PathResult RouteTree::build_path(std::size_t layer, std::size_t dst) const
{
    PathResult path;
    path.node_sequence = sequence(layer, dst);
    path.hop_count = static_cast<int>(path.node_sequence.size()) - 1;
    // Walk the predecessor chain again to pick up the chosen links.
    std::size_t x = dst;
    std::size_t h = layer;
    for (int k = 0; k < path.hop_count; ++k)
    {
        const Label &lab = max_hops_ ? labels_[h][x] : labels_[0][x];
        path.edge_ids.push_back(lab.pred_edge);
        x = lab.pred;
        if (max_hops_)
            --h;
    }
    std::reverse(path.edge_ids.begin(), path.edge_ids.end());
    for (const std::size_t e : path.edge_ids)
        path.edge_kinds.push_back(g_->edge(e).kind);
    path.total_cost = (max_hops_ ? labels_[layer][dst] : labels_[0][dst]).cost;
    path.bottleneck_rate_bps = bottleneck_rate(path, *g_);
    return path;
}

std::optional<PathResult> RouteTree::path_to(std::size_t dst) const
{
    if (dst >= g_->node_count())
        throw std::out_of_range("destination index out of range");
    const auto layer = best_layer(dst);
    if (!layer)
        return std::nullopt;
    return build_path(*layer, dst);
}

std::vector<bool> RouteTree::extendable() const
{
    const std::size_t n = g_->node_count();
    std::vector<bool> out(n, false);
    if (!max_hops_)
    {
        for (std::size_t v = 0; v < n; ++v)
            out[v] = hops_[v] >= 0;
        return out;
    }
    const std::size_t top = std::min(labels_.size(), static_cast<std::size_t>(*max_hops_));
    for (std::size_t h = 0; h < top; ++h)
        for (std::size_t v = 0; v < n; ++v)
            out[v] = out[v] || labels_[h][v].cost != kInfeasibleCost;
    return out;
}

std::optional<RouteTree::ProbeRoute> RouteTree::route_probe(std::span<const BackhaulEdge> attach) const
{
    // Collapse parallel attachment links exactly as FeasibleAdjacency does.
    struct Choice
    {
        std::size_t node;
        std::size_t index;
        double cost;
    };
    std::vector<Choice> choices;
    for (std::size_t i = 0; i < attach.size(); ++i)
    {
        const double c = edge_cost(attach[i], req_, penalty_);
        if (c == kInfeasibleCost)
            continue;
        check_cost(c);
        const std::size_t u = attach[i].a;
        auto it = std::find_if(choices.begin(), choices.end(), [&](const Choice &ch) { return ch.node == u; });
        if (it == choices.end())
            choices.push_back({u, i, c});
        else if (prefer_link(c, attach[i], i, it->cost, attach[it->index], it->index))
            *it = {u, i, c};
    }
    std::sort(choices.begin(), choices.end(), [](const Choice &l, const Choice &r) { return l.node < r.node; });

    bool found = false;
    double best_cost = kInfeasibleCost;
    int best_hops = 0;
    std::size_t best_layer_idx = 0;
    const Choice *best_choice = nullptr;

    auto consider = [&](const Choice &ch, std::size_t layer, double base_cost, int hops) {
        const double nc = base_cost + ch.cost;
        bool better = !found || nc < best_cost;
        if (found && nc == best_cost)
        {
            if (hops != best_hops)
                better = hops < best_hops;
            else
                better = compare_sequences(layer, ch.node, best_layer_idx, best_choice->node) < 0;
        }
        if (better)
        {
            found = true;
            best_cost = nc;
            best_hops = hops;
            best_layer_idx = layer;
            best_choice = &ch;
        }
    };

    for (const auto &ch : choices)
    {
        if (!max_hops_)
        {
            if (hops_[ch.node] >= 0)
                consider(ch, 0, labels_[0][ch.node].cost, hops_[ch.node] + 1);
            continue;
        }
        const std::size_t top = std::min(labels_.size(), static_cast<std::size_t>(*max_hops_));
        for (std::size_t h = 0; h < top; ++h)
            if (labels_[h][ch.node].cost != kInfeasibleCost)
                consider(ch, h, labels_[h][ch.node].cost, static_cast<int>(h) + 1);
    }
    if (!found)
        return std::nullopt;

    ProbeRoute route;
    PathResult prefix = build_path(best_layer_idx, best_choice->node);
    route.path = prefix;
    route.path.node_sequence.push_back(g_->node_count());
    route.path.edge_ids.push_back(best_choice->index);
    route.path.edge_kinds.push_back(attach[best_choice->index].kind);
    route.path.hop_count = prefix.hop_count + 1;
    route.path.total_cost = best_cost;
    route.bottleneck_rate_bps = std::min(prefix.bottleneck_rate_bps, attach[best_choice->index].link.rate_bps);
    route.path.bottleneck_rate_bps = route.bottleneck_rate_bps;
    return route;
}

std::optional<PathResult> shortest_path(const AugmentedGraph &g, std::size_t dst, const LinkRequirement &req,
                                        double penalty_db, std::optional<int> max_hops)
{
    return RouteTree(g, req, penalty_db, max_hops).path_to(dst);
}

HopMap min_hop_map(const AugmentedGraph &g, const LinkRequirement &req, int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("hop budget must be at least 1");
    HopMap hops(g.node_count());
    std::vector<std::size_t> frontier{g.mbs_index()};
    hops[g.mbs_index()] = 0;
    for (int depth = 1; depth <= n_max && !frontier.empty(); ++depth)
    {
        std::vector<std::size_t> next;
        for (const std::size_t v : frontier)
        {
            for (const std::size_t id : g.incident(v))
            {
                const BackhaulEdge &e = g.edge(id);
                const std::size_t w = e.other(v);
                if (hops[w] || !req.admits(e))
                    continue;
                hops[w] = depth;
                next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    return hops;
}

std::vector<std::size_t> reachable_set(const AugmentedGraph &g, int n, double snr_min_db)
{
    const HopMap hops = min_hop_map(g, LinkRequirement::from_snr_db(snr_min_db), n);
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (g.role(v) == NodeRole::Candidate && hops[v])
            out.push_back(v);
    return out;
}

std::vector<CoverageRow> coverage_curve(const AugmentedGraph &without_ris, const AugmentedGraph &with_ris, int n_max,
                                        std::span<const double> snr_min_list)
{
    if (without_ris.nodes() != with_ris.nodes())
        throw std::invalid_argument("coverage variants must share the node set");
    if (n_max < 1)
        throw std::invalid_argument("hop budget must be at least 1");

    std::size_t total = 0;
    for (std::size_t v = 0; v < without_ris.node_count(); ++v)
        total += without_ris.role(v) == NodeRole::Candidate ? 1 : 0;

    std::vector<CoverageRow> rows;
    for (const double snr : snr_min_list)
    {
        for (const bool ris : {false, true})
        {
            const AugmentedGraph &g = ris ? with_ris : without_ris;
            const HopMap hops = min_hop_map(g, LinkRequirement::from_snr_db(snr), n_max);
            std::vector<std::size_t> at_depth(static_cast<std::size_t>(n_max) + 1, 0);
            for (std::size_t v = 0; v < g.node_count(); ++v)
                if (g.role(v) == NodeRole::Candidate && hops[v])
                    ++at_depth[static_cast<std::size_t>(*hops[v])];
            std::size_t cumulative = 0;
            for (int n = 1; n <= n_max; ++n)
            {
                cumulative += at_depth[static_cast<std::size_t>(n)];
                rows.push_back({snr, n, ris, cumulative, total});
            }
        }
    }
    return rows;
}

} // namespace risbh
