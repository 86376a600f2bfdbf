// SPDX-License-Identifier: Apache-2.0
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

#ifndef SSCM_PATHLOSS_HPP
#define SSCM_PATHLOSS_HPP

#include "sscm/params.hpp"
#include "sscm/rng.hpp"

namespace sscm {

inline constexpr double kSpeedOfLight = 3e8; // m/s

double wavelength_m(double carrier_frequency_hz);

// Free space path loss at d0 = 1 m: 20 log10(4 pi d0 / lambda).
double free_space_ref_pl(double carrier_frequency_hz);

/// Close-in reference path loss PL(d0) + 10 n log10(d / d0) + shadow.
/// Throws DomainError when distance_m < d0.
double path_loss(const PathLossParams &pl, double carrier_frequency_hz, double distance_m, double shadow_db);

// Zero-mean Gaussian shadow sample in dB.
double draw_shadow(double sigma_db, Rng &rng);

inline double received_power(double tx_power_dbm, double path_loss_db) { return tx_power_dbm - path_loss_db; }

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

struct LinkBudget {
    double tx_power_dbm = 0.0;
    double distance_m = 0.0;
    double path_loss_db = 0.0;
    double shadow_db = 0.0;
    double rx_power_dbm = 0.0;
    double wavelength_m = 0.0;
};

LinkBudget make_link_budget(const PathLossParams &pl, double carrier_frequency_hz, double tx_power_dbm,
                            double distance_m, double shadow_db);

} // namespace sscm

#endif
