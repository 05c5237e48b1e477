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

#include <stdexcept>

namespace risbh
{

class RadioError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

// How the distance term of the path-loss models is written.
//   Normalized:   PL(d0) + 10 n log10(d / d0)   (loss equals PL(d0) at d0)
//   Unnormalized: PL(d0) + 10 n log10(d)
enum class LogDistanceConvention
{
    Normalized,
    Unnormalized,
};

// Link-budget parameters. Defaults are the 38 GHz backhaul set:
// 100 mW transmit power, 15 dB RIS beamforming gain, -131 dBm noise,
// 82 % throughput efficiency over 18.72 MHz effective bandwidth.
struct RadioParams
{
    double pl_ref_db = 39.0;  // PL(d0)
    double d0 = 5.0;          // m
    double alpha = 2.13;      // direct-link exponent
    double beta = 2.13;       // RIS-link exponent
    int m_surfaces = 3;       // meta-surfaces per RIS
    double g_bf_db = 15.0;    // RIS beamforming gain
    double p_tx_dbm = 20.0;
    double p_max_dbm = 20.0;
    double g_tx_db = 0.0;
    double g_rx_db = 0.0;
    double noise_dbm = -131.0;
    double eta = 0.82;
    double b_eff_hz = 18.72e6;
    LogDistanceConvention convention = LogDistanceConvention::Normalized;

    // Throws RadioError naming the first violated constraint.
    void validate() const;

    friend bool operator==(const RadioParams &, const RadioParams &) = default;
};

struct LinkBudget
{
    double pl_db = 0.0;
    double snr_db = 0.0;
    double rate_bps = 0.0;

    friend bool operator==(const LinkBudget &, const LinkBudget &) = default;
};

double pl_direct_db(double d, const RadioParams &p);
double pl_ris_db(double d1, double d2, const RadioParams &p);

double snr_db(double pl_db, const RadioParams &p);

// eta * B * log2(1 + SNR). Returns 0 for snr_db = -inf.
double rate_bps(double snr_db, const RadioParams &p);

// Inverse of rate_bps.
double min_snr_for_rate_db(double c_min_bps, const RadioParams &p);

bool link_feasible(double pl_db, double snr_min_db, const RadioParams &p);

LinkBudget link_budget(double pl_db, const RadioParams &p);

} // namespace risbh
