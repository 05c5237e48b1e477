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

#include "risbh/radio.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace risbh
{

namespace
{

double log_distance_term(double d, const RadioParams &p)
{
    return p.convention == LogDistanceConvention::Normalized ? std::log10(d / p.d0) : std::log10(d);
}

} // namespace

void RadioParams::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw RadioError(std::string("invalid radio parameters: ") + what);
    };
    require(std::isfinite(pl_ref_db), "pl_ref_db must be finite");
    require(d0 > 0.0, "d0 must be positive");
    require(alpha > 0.0, "alpha must be positive");
    require(beta > 0.0, "beta must be positive");
    require(m_surfaces >= 1, "m_surfaces must be at least 1");
    require(std::isfinite(g_bf_db), "g_bf_db must be finite");
    require(std::isfinite(p_tx_dbm) && std::isfinite(p_max_dbm), "powers must be finite");
    require(p_tx_dbm <= p_max_dbm, "p_tx_dbm exceeds p_max_dbm");
    require(std::isfinite(g_tx_db) && std::isfinite(g_rx_db), "antenna gains must be finite");
    require(std::isfinite(noise_dbm), "noise_dbm must be finite");
    require(eta > 0.0 && eta <= 1.0, "eta must be in (0, 1]");
    require(b_eff_hz > 0.0, "b_eff_hz must be positive");
}

double pl_direct_db(double d, const RadioParams &p)
{
    if (!(d >= p.d0))
        throw RadioError("direct distance " + std::to_string(d) + " m is below the reference distance");
    return p.pl_ref_db + 10.0 * p.alpha * log_distance_term(d, p);
}

double pl_ris_db(double d1, double d2, const RadioParams &p)
{
    if (!(d1 > 0.0) || !(d2 > 0.0))
        throw RadioError("RIS leg distances must be positive");
    const double m2 = static_cast<double>(p.m_surfaces) * p.m_surfaces;
    const double effective = m2 * (d1 + d2);
    if (!(effective >= p.d0))
        throw RadioError("RIS effective distance is below the reference distance");
    return p.pl_ref_db + 10.0 * p.beta * log_distance_term(effective, p) - p.g_bf_db;
}

double snr_db(double pl_db, const RadioParams &p)
{
    return p.p_tx_dbm + p.g_tx_db + p.g_rx_db - pl_db - p.noise_dbm;
}

double rate_bps(double snr, const RadioParams &p)
{
    const double linear = std::pow(10.0, snr / 10.0);
    return p.eta * p.b_eff_hz * std::log1p(linear) / std::numbers::ln2;
}

double min_snr_for_rate_db(double c_min_bps, const RadioParams &p)
{
    if (!(c_min_bps > 0.0))
        throw RadioError("rate requirement must be positive");
    const double bits_per_hz = c_min_bps / (p.eta * p.b_eff_hz);
    return 10.0 * std::log10(std::expm1(bits_per_hz * std::numbers::ln2));
}

bool link_feasible(double pl_db, double snr_min_db, const RadioParams &p)
{
    return snr_db(pl_db, p) >= snr_min_db;
}

LinkBudget link_budget(double pl_db, const RadioParams &p)
{
    const double s = snr_db(pl_db, p);
    return {pl_db, s, rate_bps(s, p)};
}

} // namespace risbh
