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

#include "risbh/cli.hpp"

#include "risbh/madrid.hpp"
#include "risbh/planner.hpp"
#include "risbh/raster.hpp"
#include "risbh/routing.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace risbh::cli
{

namespace fs = std::filesystem;

namespace
{

const char *variant_name(bool with_ris) { return with_ris ? "with_ris" : "no_ris"; }

std::vector<bool> variants(const BackhaulModel &model)
{
    if (model.has_ris())
        return {false, true};
    return {false};
}

fs::path write_file(const fs::path &dir, const std::string &name, const std::string &content)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out)
        throw IoError("failed writing " + path.string());
    return path;
}

std::string kind_label(const EdgeKind &kind)
{
    return kind.is_direct() ? std::string("Direct") : fmt::format("ViaRis[{}]", kind.ris_index);
}

struct VariantRoute
{
    std::optional<PathResult> path;
    std::string failure; // set when path is empty
};

VariantRoute route_destination(const AugmentedGraph &g, std::size_t dst, const ExperimentSettings &ex)
{
    const LinkRequirement req = LinkRequirement::from_snr_db(ex.least_strict_snr_db());
    VariantRoute out;
    out.path = shortest_path(g, dst, req, ex.penalty_p, ex.n_max);
    if (out.path)
        return out;
    if (!shortest_path(g, dst, LinkRequirement{}, ex.penalty_p))
        out.failure = "no line-of-sight chain to the destination";
    else if (!shortest_path(g, dst, req, ex.penalty_p))
        out.failure = "rate threshold: every line-of-sight chain has a hop below the required SNR";
    else
        out.failure = fmt::format("hop budget: every usable chain needs more than {} hops", ex.n_max);
    return out;
}

} // namespace

std::vector<fs::path> cmd_hops_map(const RunConfig &config)
{
    const BackhaulModel model(config.scenario);
    const ExperimentSettings &ex = model.scenario().experiment;
    std::vector<fs::path> files;
    for (const double snr : ex.snr_min_db)
    {
        for (const bool ris : variants(model))
        {
            const AugmentedGraph &g = model.graph(ris);
            const HopMap hops = min_hop_map(g, LinkRequirement::from_snr_db(snr), ex.n_max);
            std::ostringstream csv;
            csv << "x,y,min_hops\n";
            for (std::size_t v = 1; v < g.node_count(); ++v)
            {
                const Point2D p = g.node(v);
                if (hops[v])
                    fmt::print(csv, "{:.3f},{:.3f},{}\n", p.x, p.y, *hops[v]);
                else
                    fmt::print(csv, "{:.3f},{:.3f},unreachable\n", p.x, p.y);
            }
            files.push_back(
                write_file(config.out_dir, fmt::format("hops_{}_snr{:g}.csv", variant_name(ris), snr), csv.str()));
        }
    }
    return files;
}

std::vector<fs::path> cmd_rate_heatmap(const RunConfig &config)
{
    const BackhaulModel model(config.scenario);
    std::vector<std::pair<bool, RateRaster>> rasters;
    double ref = 0.0;
    for (const bool ris : variants(model))
    {
        rasters.emplace_back(ris, rasterize_rate_map(model, ris));
        ref = std::max(ref, max_finite_rate(rasters.back().second));
    }
    std::vector<fs::path> files;
    for (const auto &[ris, raster] : rasters)
    {
        std::ostringstream pgm;
        write_pgm(raster, ref, pgm);
        files.push_back(write_file(config.out_dir, fmt::format("rate_{}.pgm", variant_name(ris)), pgm.str()));
        std::ostringstream csv;
        write_raster_csv(raster, csv);
        files.push_back(write_file(config.out_dir, fmt::format("rate_{}.csv", variant_name(ris)), csv.str()));
    }
    return files;
}

std::vector<fs::path> cmd_coverage_bars(const RunConfig &config)
{
    const BackhaulModel model(config.scenario);
    const ExperimentSettings &ex = model.scenario().experiment;
    const auto rows = coverage_curve(model.graph(false), model.graph(true), ex.n_max, ex.snr_min_db);
    std::ostringstream csv;
    csv << "snr_min_db,n,ris_variant,reached,total\n";
    for (const auto &row : rows)
    {
        if (row.with_ris && !model.has_ris())
            continue;
        fmt::print(csv, "{:g},{},{},{},{}\n", row.snr_min_db, row.n, variant_name(row.with_ris), row.reached,
                   row.total);
    }
    return {write_file(config.out_dir, "coverage.csv", csv.str())};
}

PathReport cmd_path(const RunConfig &config, Point2D dst)
{
    const BackhaulModel model(config.scenario);
    const Scenario &sc = model.scenario();
    if (!is_finite(dst) || !sc.map.bounds().contains(dst))
        throw ArgumentError(fmt::format("destination ({}, {}) lies outside the map bounds", dst.x, dst.y));
    if (const int b = sc.map.building_containing(dst); b >= 0)
        throw ArgumentError(fmt::format("destination ({}, {}) lies inside building {}", dst.x, dst.y, b));

    PathReport report;
    std::ostringstream text;
    fmt::print(text, "destination: ({:.3f}, {:.3f})\nrequirement: SNR >= {:g} dB, at most {} hops\n", dst.x, dst.y,
               sc.experiment.least_strict_snr_db(), sc.experiment.n_max);

    std::vector<std::pair<std::string, std::string>> outputs;
    for (const bool ris : variants(model))
    {
        const AugmentedGraph &base = model.graph(ris);
        std::optional<AugmentedGraph> probed;
        std::size_t target = 0;
        if (const auto node = model.node_at(dst))
        {
            target = *node;
        }
        else
        {
            probed.emplace(with_probe(base, dst, model.index()));
            target = base.node_count();
        }
        const AugmentedGraph &g = probed ? *probed : base;
        const VariantRoute route = route_destination(g, target, sc.experiment);

        std::ostringstream csv;
        csv << "hop,from,to,from_x,from_y,to_x,to_y,kind,ris_index,d1_m,d2_m,pl_db,snr_db,rate_bps\n";
        fmt::print(text, "\n[{}]\n", variant_name(ris));
        if (!route.path)
        {
            fmt::print(text, "status: unreachable ({})\n", route.failure);
        }
        else
        {
            const PathResult &path = *route.path;
            (ris ? report.reachable_with_ris : report.reachable_without_ris) = true;
            if (path.hop_count == 0)
                fmt::print(text, "status: reachable, 0 hops (destination is the MBS)\n");
            else
                fmt::print(text, "status: reachable, {} hop(s), bottleneck {:.3f} Mbps, cost {:.3f}\n",
                           path.hop_count, path.bottleneck_rate_bps / 1e6, path.total_cost);
            for (int k = 0; k < path.hop_count; ++k)
            {
                const std::size_t from = path.node_sequence[k];
                const std::size_t to = path.node_sequence[k + 1];
                const BackhaulEdge &e = g.edge(path.edge_ids[k]);
                const Point2D a = g.node(from);
                const Point2D b = g.node(to);
                // Leg distances are stored transmitter-first relative to edge.a.
                const double d1 = e.kind.is_direct() ? e.d1_m : (e.a == from ? e.d1_m : e.d2_m);
                const double d2 = e.kind.is_direct() ? 0.0 : (e.a == from ? e.d2_m : e.d1_m);
                fmt::print(text,
                           "hop {}: {} ({:.3f}, {:.3f}) -> {} ({:.3f}, {:.3f}) {} d1={:.3f} m d2={:.3f} m "
                           "PL={:.3f} dB SNR={:.3f} dB rate={:.3f} Mbps\n",
                           k + 1, from, a.x, a.y, to, b.x, b.y, kind_label(e.kind), d1, d2, e.link.pl_db,
                           e.link.snr_db, e.link.rate_bps / 1e6);
                fmt::print(csv, "{},{},{},{:.3f},{:.3f},{:.3f},{:.3f},{},{},{:.3f},{:.3f},{:.6f},{:.6f},{:.3f}\n", k + 1,
                           from, to, a.x, a.y, b.x, b.y, e.kind.is_direct() ? "Direct" : "ViaRis",
                           e.kind.is_direct() ? std::string() : std::to_string(e.kind.ris_index), d1, d2,
                           e.link.pl_db, e.link.snr_db, e.link.rate_bps);
            }
        }
        outputs.emplace_back(fmt::format("path_{}.csv", variant_name(ris)), csv.str());
    }

    report.text = text.str();
    report.files.push_back(write_file(config.out_dir, "path.txt", report.text));
    for (const auto &[name, content] : outputs)
        report.files.push_back(write_file(config.out_dir, name, content));
    return report;
}

namespace
{

struct CommonOptions
{
    std::string scenario_path;
    std::string generate;
    bool ris_center = false;
    std::vector<double> snr_min;
    std::optional<int> n_max;
    std::optional<double> penalty;
    std::optional<double> grid;
    std::string out_dir;
};

void add_common(CLI::App &cmd, CommonOptions &o)
{
    auto *scenario = cmd.add_option("--scenario", o.scenario_path, "Scenario file (JSON)");
    auto *generate = cmd.add_option("--generate", o.generate,
                                    "Generate a block grid: blocks_x,blocks_y,block_w,block_h,street_w");
    scenario->excludes(generate);
    cmd.add_flag("--ris-center", o.ris_center, "Place two RIS on the facades around the central square")
        ->needs(generate);
    cmd.add_option("--snr-min", o.snr_min, "SNR requirements in dB, comma separated")->delimiter(',');
    cmd.add_option("--n-max", o.n_max, "Hop budget");
    cmd.add_option("--penalty", o.penalty, "Per-hop routing penalty (dB)");
    cmd.add_option("--grid", o.grid, "Heatmap grid spacing (m)");
    cmd.add_option("--out", o.out_dir, "Output directory")->required();
}

MadridGridSpec parse_generate(const std::string &text, bool ris_center)
{
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        try
        {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        }
        catch (const std::exception &)
        {
            throw ArgumentError("--generate expects numbers, got \"" + item + "\"");
        }
    }
    if (v.size() != 5)
        throw ArgumentError("--generate expects blocks_x,blocks_y,block_w,block_h,street_w");
    if (v[0] != std::floor(v[0]) || v[1] != std::floor(v[1]) || v[0] < 1 || v[1] < 1)
        throw ArgumentError("--generate block counts must be positive integers");
    if (!(v[2] > 0 && v[3] > 0 && v[4] > 0))
        throw ArgumentError("--generate dimensions must be positive");
    return {static_cast<int>(v[0]), static_cast<int>(v[1]), v[2], v[3], v[4], ris_center};
}

Point2D parse_point_arg(const std::string &text)
{
    const auto comma = text.find(',');
    try
    {
        if (comma == std::string::npos)
            throw std::invalid_argument(text);
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    }
    catch (const std::exception &)
    {
        throw ArgumentError("--dst expects x,y");
    }
}

RunConfig resolve(const CommonOptions &o)
{
    RunConfig config;
    if (!o.scenario_path.empty())
    {
        try
        {
            config.scenario = load_scenario_file(o.scenario_path);
        }
        catch (const fs::filesystem_error &e)
        {
            throw IoError(e.what());
        }
    }
    else if (!o.generate.empty())
    {
        try
        {
            config.scenario = madrid_like_scenario(parse_generate(o.generate, o.ris_center));
        }
        catch (const std::invalid_argument &e)
        {
            throw ArgumentError(e.what());
        }
    }
    else
    {
        throw ArgumentError("one of --scenario or --generate is required");
    }

    ExperimentSettings &ex = config.scenario.experiment;
    if (!o.snr_min.empty())
        ex.snr_min_db = o.snr_min;
    if (o.n_max)
        ex.n_max = *o.n_max;
    if (o.penalty)
        ex.penalty_p = *o.penalty;
    if (o.grid)
        ex.grid_spacing_m = *o.grid;
    try
    {
        config.scenario.validate();
    }
    catch (const ScenarioError &e)
    {
        // Overrides come from the command line.
        throw ArgumentError(e.what());
    }
    config.out_dir = o.out_dir;
    return config;
}

void print_files(const std::vector<fs::path> &files)
{
    for (const auto &f : files)
        std::cout << f.string() << '\n';
}

} // namespace

int run(int argc, const char *const *argv)
{
    CLI::App app{"Multi-hop drone backhaul planner with RIS-assisted links"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string dst_text;

    auto *hops = app.add_subcommand("hops-map", "Minimum hop count per candidate location");
    auto *heat = app.add_subcommand("rate-heatmap", "Achievable bottleneck rate raster");
    auto *bars = app.add_subcommand("coverage-bars", "Reachable candidate counts per SNR requirement and hop budget");
    auto *path = app.add_subcommand("path", "Route report for one destination");
    auto *all = app.add_subcommand("all", "hops-map, rate-heatmap and coverage-bars in one run");
    auto *dump = app.add_subcommand("scenario", "Write the resolved scenario as scenario.json");
    for (auto *cmd : {hops, heat, bars, path, all, dump})
        add_common(*cmd, opts);
    path->add_option("--dst", dst_text, "Destination x,y in meters")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArguments;
    }

    try
    {
        const RunConfig config = resolve(opts);
        if (hops->parsed())
            print_files(cmd_hops_map(config));
        else if (heat->parsed())
            print_files(cmd_rate_heatmap(config));
        else if (bars->parsed())
            print_files(cmd_coverage_bars(config));
        else if (all->parsed())
        {
            print_files(cmd_hops_map(config));
            print_files(cmd_rate_heatmap(config));
            print_files(cmd_coverage_bars(config));
        }
        else if (dump->parsed())
            print_files({write_file(config.out_dir, "scenario.json", save_scenario(config.scenario))});
        else
        {
            const PathReport report = cmd_path(config, parse_point_arg(dst_text));
            std::cout << report.text;
        }
        return kExitOk;
    }
    catch (const ArgumentError &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArguments;
    }
    catch (const ScenarioError &e)
    {
        std::cerr << "invalid scenario: " << e.what() << '\n';
        return kExitInvalidScenario;
    }
    catch (const GeometryError &e)
    {
        std::cerr << "invalid scenario: " << e.what() << '\n';
        return kExitInvalidScenario;
    }
    catch (const IoError &e)
    {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIoFailure;
    }
    catch (const fs::filesystem_error &e)
    {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIoFailure;
    }
}

} // namespace risbh::cli
