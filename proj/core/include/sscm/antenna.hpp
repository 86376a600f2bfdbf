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

#ifndef SSCM_ANTENNA_HPP
#define SSCM_ANTENNA_HPP

#include <utility>
#include <vector>

#include "sscm/channel.hpp"

namespace sscm {

/// Gaussian-beam directive gain pattern with a sidelobe floor.
///
/// gain(theta, phi) = max(G0 exp(-(alpha theta^2 + beta phi^2)), G0 / 100), with
/// alpha = 4 ln 2 / az_hpbw^2, beta = 4 ln 2 / el_hpbw^2 and
/// G0 = 41253 efficiency / (az_hpbw el_hpbw). Offsets in degrees.
struct AntennaPattern {
    double az_hpbw_deg = 360.0;
    double el_hpbw_deg = 180.0;
    double efficiency = 0.7;
    double boresight_gain_linear = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    bool has_floor = true;

    static AntennaPattern horn(double az_hpbw_deg, double el_hpbw_deg, double efficiency = 0.7);
    // Unit gain in every direction; no floor.
    static AntennaPattern isotropic();

    double floor_gain_linear() const { return has_floor ? boresight_gain_linear / 100.0 : 0.0; }
};

struct Pointing {
    double az_deg = 0.0;
    double el_deg = 0.0;

    // Throws ConfigError unless az in [0, 360) and el in [-90, 90].
    void validate() const;
    friend bool operator==(const Pointing &, const Pointing &) = default;
};

// Linear power gain; azimuth offset is wrapped to (-180, 180], elevation is used as given.
double gain(const AntennaPattern &pattern, double az_offset_deg, double el_offset_deg);

struct Tap {
    double abs_delay_ns = 0.0;
    double power_mw = 0.0;
    double phase_rad = 0.0;
};

struct DirectionalPdp {
    std::vector<Tap> taps; // ascending delay
    Pointing tx_pointing;
    Pointing rx_pointing;

    double total_power_mw() const;
};

// Omnidirectional subpaths weighted by TX and RX pattern gains toward the given pointings.
DirectionalPdp directional_cir(const OmniChannel &channel, const AntennaPattern &tx_pattern,
                               const AntennaPattern &rx_pattern, const Pointing &tx_pointing,
                               const Pointing &rx_pointing);

// TX/RX pointings at the AOD/AOA of the strongest retained subpath. Throws NoPointingError on outage.
std::pair<Pointing, Pointing> best_pointing(const OmniChannel &channel);

} // namespace sscm

#endif
