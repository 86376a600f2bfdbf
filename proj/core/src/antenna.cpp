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

#include "sscm/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sscm/error.hpp"

namespace sscm {

AntennaPattern AntennaPattern::horn(double az_hpbw_deg, double el_hpbw_deg, double efficiency)
{
    if (!(az_hpbw_deg > 0.0 && el_hpbw_deg > 0.0))
        throw ConfigError("beamwidths must be positive");
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw ConfigError("antenna efficiency must lie in (0, 1]");
    AntennaPattern p;
    p.az_hpbw_deg = az_hpbw_deg;
    p.el_hpbw_deg = el_hpbw_deg;
    p.efficiency = efficiency;
    p.boresight_gain_linear = 41253.0 * efficiency / (az_hpbw_deg * el_hpbw_deg);
    p.alpha = 4.0 * std::numbers::ln2 / (az_hpbw_deg * az_hpbw_deg);
    p.beta = 4.0 * std::numbers::ln2 / (el_hpbw_deg * el_hpbw_deg);
    p.has_floor = true;
    return p;
}

AntennaPattern AntennaPattern::isotropic()
{
    AntennaPattern p;
    p.efficiency = 1.0;
    p.boresight_gain_linear = 1.0;
    p.alpha = 0.0;
    p.beta = 0.0;
    p.has_floor = false;
    return p;
}

void Pointing::validate() const
{
    if (!(az_deg >= 0.0 && az_deg < 360.0))
        throw ConfigError("pointing azimuth must lie in [0, 360)");
    if (!(el_deg >= -90.0 && el_deg <= 90.0))
        throw ConfigError("pointing elevation must lie in [-90, 90]");
}

double gain(const AntennaPattern &pattern, double az_offset_deg, double el_offset_deg)
{
    const double theta = wrap_offset_deg(az_offset_deg);
    const double phi = el_offset_deg;
    const double main = pattern.boresight_gain_linear * std::exp(-(pattern.alpha * theta * theta + pattern.beta * phi * phi));
    return std::max(main, pattern.floor_gain_linear());
}

double DirectionalPdp::total_power_mw() const
{
    double total = 0.0;
    for (const auto &t : taps)
        total += t.power_mw;
    return total;
}

DirectionalPdp directional_cir(const OmniChannel &channel, const AntennaPattern &tx_pattern,
                               const AntennaPattern &rx_pattern, const Pointing &tx_pointing,
                               const Pointing &rx_pointing)
{
    tx_pointing.validate();
    rx_pointing.validate();
    DirectionalPdp pdp;
    pdp.tx_pointing = tx_pointing;
    pdp.rx_pointing = rx_pointing;
    pdp.taps.reserve(channel.subpath_count());
    for (const auto &c : channel.clusters) {
        for (const auto &s : c.subpaths) {
            const double g_tx = gain(tx_pattern, tx_pointing.az_deg - s.aod_az_deg, tx_pointing.el_deg - s.aod_el_deg);
            const double g_rx = gain(rx_pattern, rx_pointing.az_deg - s.aoa_az_deg, rx_pointing.el_deg - s.aoa_el_deg);
            pdp.taps.push_back({s.abs_delay_ns, s.power_mw * g_tx * g_rx, s.phase_rad});
        }
    }
    std::stable_sort(pdp.taps.begin(), pdp.taps.end(),
                     [](const Tap &a, const Tap &b) { return a.abs_delay_ns < b.abs_delay_ns; });
    return pdp;
}

std::pair<Pointing, Pointing> best_pointing(const OmniChannel &channel)
{
    const Subpath *best = nullptr;
    for (const auto &c : channel.clusters)
        for (const auto &s : c.subpaths)
            if (best == nullptr || s.power_mw > best->power_mw)
                best = &s;
    if (channel.outage || best == nullptr)
        throw NoPointingError("channel has no retained subpaths");
    return {Pointing{best->aod_az_deg, best->aod_el_deg}, Pointing{best->aoa_az_deg, best->aoa_el_deg}};
}

} // namespace sscm
