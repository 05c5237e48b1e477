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

#include "risbh/scenario.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace risbh
{

using nlohmann::json;

namespace
{

const std::set<std::string> kTopKeys{"bounds", "buildings", "mbs", "ris", "candidates", "radio", "experiment"};
const std::set<std::string> kRadioKeys{"pl_ref_db", "d0",       "alpha",    "beta",      "m_surfaces",
                                       "g_bf_db",   "p_tx_dbm", "p_max_dbm", "g_tx_db",  "g_rx_db",
                                       "noise_dbm", "eta",      "b_eff_hz", "convention"};
const std::set<std::string> kExperimentKeys{"snr_min_db", "n_max", "penalty_p", "grid_spacing_m"};

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where)
{
    for (const auto &item : obj.items())
        if (!allowed.contains(item.key()))
            throw ScenarioError("unknown key \"" + item.key() + "\" in " + where);
}

Point2D parse_point(const json &j, const std::string &what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ScenarioError(what + " must be a [x, y] pair of numbers");
    const Point2D p{j[0].get<double>(), j[1].get<double>()};
    if (!is_finite(p))
        throw ScenarioError(what + " is not finite");
    return p;
}

json point_json(Point2D p) { return json::array({p.x, p.y}); }

template <typename T> void read_field(const json &obj, const char *key, T &out)
{
    if (obj.contains(key))
        out = obj.at(key).get<T>();
}

RadioParams parse_radio(const json &j)
{
    if (!j.is_object())
        throw ScenarioError("\"radio\" must be an object");
    reject_unknown(j, kRadioKeys, "radio");
    RadioParams p;
    read_field(j, "pl_ref_db", p.pl_ref_db);
    read_field(j, "d0", p.d0);
    read_field(j, "alpha", p.alpha);
    read_field(j, "beta", p.beta);
    read_field(j, "m_surfaces", p.m_surfaces);
    read_field(j, "g_bf_db", p.g_bf_db);
    read_field(j, "p_tx_dbm", p.p_tx_dbm);
    read_field(j, "p_max_dbm", p.p_max_dbm);
    read_field(j, "g_tx_db", p.g_tx_db);
    read_field(j, "g_rx_db", p.g_rx_db);
    read_field(j, "noise_dbm", p.noise_dbm);
    read_field(j, "eta", p.eta);
    read_field(j, "b_eff_hz", p.b_eff_hz);
    if (j.contains("convention"))
    {
        const auto c = j.at("convention").get<std::string>();
        if (c == "normalized")
            p.convention = LogDistanceConvention::Normalized;
        else if (c == "unnormalized")
            p.convention = LogDistanceConvention::Unnormalized;
        else
            throw ScenarioError("radio.convention must be \"normalized\" or \"unnormalized\"");
    }
    return p;
}

json radio_json(const RadioParams &p)
{
    return json{{"pl_ref_db", p.pl_ref_db},
                {"d0", p.d0},
                {"alpha", p.alpha},
                {"beta", p.beta},
                {"m_surfaces", p.m_surfaces},
                {"g_bf_db", p.g_bf_db},
                {"p_tx_dbm", p.p_tx_dbm},
                {"p_max_dbm", p.p_max_dbm},
                {"g_tx_db", p.g_tx_db},
                {"g_rx_db", p.g_rx_db},
                {"noise_dbm", p.noise_dbm},
                {"eta", p.eta},
                {"b_eff_hz", p.b_eff_hz},
                {"convention", p.convention == LogDistanceConvention::Normalized ? "normalized" : "unnormalized"}};
}

Scenario parse_document(const json &doc)
{
    if (!doc.is_object())
        throw ScenarioError("scenario document must be a JSON object");
    reject_unknown(doc, kTopKeys, "scenario");
    for (const char *key : {"bounds", "buildings", "mbs"})
        if (!doc.contains(key))
            throw ScenarioError(std::string("missing required key \"") + key + "\"");

    const json &jb = doc.at("bounds");
    if (!jb.is_array() || jb.size() != 4)
        throw ScenarioError("\"bounds\" must be [xmin, ymin, xmax, ymax]");
    const Box bounds{{jb[0].get<double>(), jb[1].get<double>()}, {jb[2].get<double>(), jb[3].get<double>()}};
    if (!(bounds.width() > 0.0) || !(bounds.height() > 0.0))
        throw ScenarioError("\"bounds\" must have positive width and height");

    const json &jbuildings = doc.at("buildings");
    if (!jbuildings.is_array())
        throw ScenarioError("\"buildings\" must be a list of vertex lists");
    std::vector<Building> buildings;
    for (std::size_t i = 0; i < jbuildings.size(); ++i)
    {
        const std::string where = "building " + std::to_string(i);
        if (!jbuildings[i].is_array())
            throw ScenarioError(where + ": must be a list of [x, y] vertices");
        std::vector<Point2D> ring;
        for (std::size_t k = 0; k < jbuildings[i].size(); ++k)
            ring.push_back(parse_point(jbuildings[i][k], where + " vertex " + std::to_string(k)));
        try
        {
            buildings.emplace_back(std::move(ring));
        }
        catch (const GeometryError &e)
        {
            throw ScenarioError(where + ": " + e.what());
        }
    }

    Scenario s;
    s.mbs = parse_point(doc.at("mbs"), "\"mbs\"");
    try
    {
        s.map = ObstacleMap(bounds, std::move(buildings));
    }
    catch (const GeometryError &e)
    {
        throw ScenarioError(e.what());
    }

    if (doc.contains("ris"))
    {
        const json &jr = doc.at("ris");
        if (!jr.is_array())
            throw ScenarioError("\"ris\" must be a list");
        for (std::size_t r = 0; r < jr.size(); ++r)
        {
            const std::string where = "RIS " + std::to_string(r);
            if (!jr[r].is_object() || !jr[r].contains("pos") || !jr[r].contains("normal"))
                throw ScenarioError(where + ": needs \"pos\" and \"normal\"");
            reject_unknown(jr[r], {"pos", "normal"}, where);
            s.ris_sites.push_back(
                {parse_point(jr[r].at("pos"), where + " pos"), parse_point(jr[r].at("normal"), where + " normal")});
        }
    }

    if (doc.contains("candidates"))
    {
        const json &jc = doc.at("candidates");
        if (!jc.is_object() || !jc.contains("mode"))
            throw ScenarioError("\"candidates\" must be an object with a \"mode\"");
        const auto mode = jc.at("mode").get<std::string>();
        if (mode == "corners")
        {
            reject_unknown(jc, {"mode", "offset_m", "midpoints"}, "candidates");
            CornerCandidates cc;
            read_field(jc, "offset_m", cc.offset_m);
            read_field(jc, "midpoints", cc.midpoints);
            s.candidates = cc;
        }
        else if (mode == "explicit")
        {
            reject_unknown(jc, {"mode", "points"}, "candidates");
            ExplicitCandidates ec;
            if (!jc.contains("points") || !jc.at("points").is_array())
                throw ScenarioError("explicit candidates need a \"points\" list");
            for (std::size_t k = 0; k < jc.at("points").size(); ++k)
                ec.points.push_back(parse_point(jc.at("points")[k], "candidate " + std::to_string(k)));
            s.candidates = std::move(ec);
        }
        else
        {
            throw ScenarioError("candidates.mode must be \"corners\" or \"explicit\"");
        }
    }

    if (doc.contains("radio"))
        s.radio = parse_radio(doc.at("radio"));

    if (doc.contains("experiment"))
    {
        const json &je = doc.at("experiment");
        if (!je.is_object())
            throw ScenarioError("\"experiment\" must be an object");
        reject_unknown(je, kExperimentKeys, "experiment");
        read_field(je, "snr_min_db", s.experiment.snr_min_db);
        read_field(je, "n_max", s.experiment.n_max);
        read_field(je, "penalty_p", s.experiment.penalty_p);
        read_field(je, "grid_spacing_m", s.experiment.grid_spacing_m);
    }
    return s;
}

} // namespace

double ExperimentSettings::least_strict_snr_db() const
{
    if (snr_min_db.empty())
        throw ScenarioError("SNR requirement list is empty");
    return *std::min_element(snr_min_db.begin(), snr_min_db.end());
}

void Scenario::validate() const
{
    if (!map.bounds().contains(mbs))
        throw ScenarioError("MBS lies outside the map bounds");
    if (const int b = map.building_containing(mbs); b >= 0)
        throw ScenarioError("MBS lies inside building " + std::to_string(b));

    for (std::size_t r = 0; r < ris_sites.size(); ++r)
    {
        const RisSite &site = ris_sites[r];
        const std::string where = "RIS " + std::to_string(r);
        if (std::abs(norm(site.normal) - 1.0) > 1e-6)
            throw ScenarioError(where + ": normal is not a unit vector");
        const auto &buildings = map.buildings();
        const auto host = std::find_if(buildings.begin(), buildings.end(),
                                       [&](const Building &b) { return b.on_boundary(site.position, 1e-6); });
        if (host == buildings.end())
            throw ScenarioError(where + ": position is not on any building facade");
        if (host->strictly_contains(site.position + 1e-3 * site.normal))
            throw ScenarioError(where + ": normal points into its building");
    }

    if (const auto *cc = std::get_if<CornerCandidates>(&candidates); cc && !(cc->offset_m > 0.0))
        throw ScenarioError("candidate offset must be positive");
    if (const auto *ec = std::get_if<ExplicitCandidates>(&candidates))
    {
        for (std::size_t k = 0; k < ec->points.size(); ++k)
        {
            const Point2D p = ec->points[k];
            const std::string where = "candidate " + std::to_string(k);
            if (!map.bounds().contains(p))
                throw ScenarioError(where + " lies outside the map bounds");
            if (const int b = map.building_containing(p); b >= 0)
                throw ScenarioError(where + " lies inside building " + std::to_string(b));
            if (distance(p, mbs) <= kGeomEps)
                throw ScenarioError(where + " coincides with the MBS");
            for (std::size_t m = 0; m < k; ++m)
                if (distance(p, ec->points[m]) <= kGeomEps)
                    throw ScenarioError(where + " duplicates candidate " + std::to_string(m));
        }
    }

    try
    {
        radio.validate();
    }
    catch (const RadioError &e)
    {
        throw ScenarioError(e.what());
    }

    if (experiment.snr_min_db.empty())
        throw ScenarioError("experiment.snr_min_db must not be empty");
    if (experiment.n_max < 1)
        throw ScenarioError("experiment.n_max must be at least 1");
    if (!(experiment.penalty_p >= 0.0))
        throw ScenarioError("experiment.penalty_p must be non-negative");
    if (!(experiment.grid_spacing_m > 0.0))
        throw ScenarioError("experiment.grid_spacing_m must be positive");
}

std::vector<Point2D> Scenario::candidate_positions() const
{
    if (const auto *ec = std::get_if<ExplicitCandidates>(&candidates))
        return ec->points;
    const auto &cc = std::get<CornerCandidates>(candidates);
    auto pts = candidate_points(map, cc.offset_m, cc.midpoints);
    std::erase_if(pts, [&](Point2D p) { return distance(p, mbs) <= kGeomEps; });
    return pts;
}

Scenario load_scenario(std::string_view document)
{
    Scenario s;
    try
    {
        s = parse_document(json::parse(document));
    }
    catch (const json::exception &e)
    {
        throw ScenarioError(std::string("malformed scenario document: ") + e.what());
    }
    s.validate();
    return s;
}

Scenario load_scenario_file(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::filesystem::filesystem_error("cannot open scenario file", path,
                                                std::make_error_code(std::errc::no_such_file_or_directory));
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

std::string save_scenario(const Scenario &s)
{
    json doc;
    const Box &b = s.map.bounds();
    doc["bounds"] = json::array({b.min.x, b.min.y, b.max.x, b.max.y});
    doc["buildings"] = json::array();
    for (const auto &building : s.map.buildings())
    {
        json ring = json::array();
        for (const Point2D v : building.vertices())
            ring.push_back(point_json(v));
        doc["buildings"].push_back(std::move(ring));
    }
    doc["mbs"] = point_json(s.mbs);
    doc["ris"] = json::array();
    for (const auto &site : s.ris_sites)
        doc["ris"].push_back({{"pos", point_json(site.position)}, {"normal", point_json(site.normal)}});
    if (const auto *ec = std::get_if<ExplicitCandidates>(&s.candidates))
    {
        json pts = json::array();
        for (const Point2D p : ec->points)
            pts.push_back(point_json(p));
        doc["candidates"] = {{"mode", "explicit"}, {"points", std::move(pts)}};
    }
    else
    {
        const auto &cc = std::get<CornerCandidates>(s.candidates);
        doc["candidates"] = {{"mode", "corners"}, {"offset_m", cc.offset_m}, {"midpoints", cc.midpoints}};
    }
    doc["radio"] = radio_json(s.radio);
    doc["experiment"] = {{"snr_min_db", s.experiment.snr_min_db},
                         {"n_max", s.experiment.n_max},
                         {"penalty_p", s.experiment.penalty_p},
                         {"grid_spacing_m", s.experiment.grid_spacing_m}};
    return doc.dump(2) + "\n";
}

} // namespace risbh
