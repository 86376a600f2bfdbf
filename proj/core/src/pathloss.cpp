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

#include "sscm/pathloss.hpp"

#include <cmath>
#include <numbers>

#include "sscm/error.hpp"

namespace sscm {

double wavelength_m(double carrier_frequency_hz)
{
    return kSpeedOfLight / carrier_frequency_hz;
}

double free_space_ref_pl(double carrier_frequency_hz)
{
    constexpr double d0 = 1.0;
    return 20.0 * std::log10(4.0 * std::numbers::pi * d0 / wavelength_m(carrier_frequency_hz));
}

double path_loss(const PathLossParams &pl, double carrier_frequency_hz, double distance_m, double shadow_db)
{
    if (!(distance_m >= pl.ref_distance_m))
        throw DomainError("distance must be >= the 1 m reference distance");
    return free_space_ref_pl(carrier_frequency_hz) + 10.0 * pl.ple * std::log10(distance_m / pl.ref_distance_m) +
           shadow_db;
}

double draw_shadow(double sigma_db, Rng &rng)
{
    return rng.normal(0.0, sigma_db);
}

double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw)
{
    return 10.0 * std::log10(mw);
}

LinkBudget make_link_budget(const PathLossParams &pl, double carrier_frequency_hz, double tx_power_dbm,
                            double distance_m, double shadow_db)
{
    LinkBudget lb;
    lb.tx_power_dbm = tx_power_dbm;
    lb.distance_m = distance_m;
    lb.shadow_db = shadow_db;
    lb.path_loss_db = path_loss(pl, carrier_frequency_hz, distance_m, shadow_db);
    lb.rx_power_dbm = received_power(tx_power_dbm, lb.path_loss_db);
    lb.wavelength_m = wavelength_m(carrier_frequency_hz);
    return lb;
}

} // namespace sscm
