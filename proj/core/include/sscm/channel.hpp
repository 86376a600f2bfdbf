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

#ifndef SSCM_CHANNEL_HPP
#define SSCM_CHANNEL_HPP

#include <cstddef>
#include <vector>

namespace sscm {

// One multipath component of the omnidirectional impulse response.
struct Subpath {
    int cluster = 1;  // n, 1-based
    int index = 1;    // m within its cluster, 1-based
    double intra_delay_ns = 0.0;
    double abs_delay_ns = 0.0;
    double power_mw = 0.0;
    double amplitude = 0.0; // sqrt(power_mw)
    double phase_rad = 0.0;
    double aod_az_deg = 0.0;
    double aod_el_deg = 0.0;
    double aoa_az_deg = 0.0;
    double aoa_el_deg = 0.0;
    int aod_lobe = 1;
    int aoa_lobe = 1;

    friend bool operator==(const Subpath &, const Subpath &) = default;
};

struct TimeCluster {
    int index = 1;
    double excess_delay_ns = 0.0;
    double power_mw = 0.0;
    std::vector<Subpath> subpaths;

    friend bool operator==(const TimeCluster &, const TimeCluster &) = default;
};

enum class LobeKind { AOD, AOA };

struct SpatialLobe {
    LobeKind kind = LobeKind::AOD;
    int index = 1;
    double mean_az_deg = 0.0;
    double mean_el_deg = 0.0;

    friend bool operator==(const SpatialLobe &, const SpatialLobe &) = default;
};

/// One realization of the double-directional omnidirectional impulse response.
///
/// Subpaths removed by the dynamic-range cut are dropped from their cluster and
/// a cluster left without subpaths is dropped from `clusters`; cluster powers
/// keep their pre-cut values. `outage` is set when nothing survives.
struct OmniChannel {
    double distance_m = 0.0;
    double t0_ns = 0.0;
    double tx_power_dbm = 0.0;
    double path_loss_db = 0.0;
    double shadow_db = 0.0;
    double rx_power_mw = 0.0;
    std::vector<TimeCluster> clusters;
    std::vector<SpatialLobe> aod_lobes;
    std::vector<SpatialLobe> aoa_lobes;
    int n_thresholded = 0;
    bool outage = false;

    std::size_t subpath_count() const;
    double total_subpath_power_mw() const;
    // All retained subpaths in cluster order.
    std::vector<Subpath> subpaths() const;

    friend bool operator==(const OmniChannel &, const OmniChannel &) = default;
};

// Azimuth folded into [0, 360).
double wrap_azimuth_deg(double az);
// Azimuth difference folded into (-180, 180].
double wrap_offset_deg(double delta);
double clamp_elevation_deg(double el);

} // namespace sscm

#endif
