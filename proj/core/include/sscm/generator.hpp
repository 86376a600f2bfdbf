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

#ifndef SSCM_GENERATOR_HPP
#define SSCM_GENERATOR_HPP

#include <span>
#include <vector>

#include "sscm/channel.hpp"
#include "sscm/params.hpp"
#include "sscm/rng.hpp"

namespace sscm {

struct DistanceRange {
    double d_min_m = 60.0;
    double d_max_m = 200.0;
};

// 30-60 m in LOS, 60-200 m in NLOS.
DistanceRange default_distance_range(Environment env);

/// Everything needed to draw one omnidirectional channel.
struct GenerationConfig {
    FrequencyScenario scenario;
    ScenarioParams params;
    PathLossParams pathloss;
    DistanceRange distance;
    double tx_power_dbm = 30.0;

    void validate() const;
};

/// Preset configuration for a scenario at a carrier frequency.
///
/// Path loss uses the measured values of the nearest band, except that LOS
/// scenarios use a free space exponent of 2.0 (the measured shadow factor is kept).
GenerationConfig make_generation_config(ScenarioKey key, double carrier_frequency_hz);

struct ChannelCounts {
    int n_clusters = 1;
    int l_aod = 1;
    int l_aoa = 1;
};

double draw_distance(const DistanceRange &range, Rng &rng);

// min{L_max, max{1, Poisson(mu)}}.
int clamp_lobe_count(int poisson_draw, int l_max);

ChannelCounts draw_counts(const ScenarioParams &params, Rng &rng);

std::vector<int> draw_subpath_counts(int n_clusters, int m_max, Rng &rng);

// rho_m = ((1/B in ns) (m - 1))^(1 + x) for m = 1..count.
std::vector<double> intra_delays_for_exponent(int count, double baseband_bw_hz, double x);

// Draws X ~ U(0, x_max) once for the cluster and returns its intra-cluster delays.
std::vector<double> gen_intra_delays(int count, double baseband_bw_hz, double x_max, Rng &rng);

/// Cluster excess delays from already sorted, min-subtracted offsets.
/// tau_1 = 0; tau_n = tau_{n-1} + last_intra[n-2] + offsets[n-1] + min_void.
std::vector<double> cluster_delays_from_offsets(std::span<const double> sorted_offsets,
                                                std::span<const double> last_intra_delays, double min_void_ns);

std::vector<double> gen_cluster_delays(int n_clusters, double mu_tau_ns, std::span<const double> last_intra_delays,
                                       double min_void_ns, Rng &rng);

/// p'_k = p0 exp(-delay_k / decay) 10^(shadow_k / 10), scaled so the result sums to total_mw.
std::vector<double> normalized_decay_powers(std::span<const double> delays_ns, double decay_ns,
                                            std::span<const double> shadows_db, double p0, double total_mw);

std::vector<double> gen_cluster_powers(std::span<const double> cluster_delays_ns, double gamma_ns, double sigma_z_db,
                                       double p0, double rx_power_mw, Rng &rng);

std::vector<double> gen_subpath_powers(std::span<const double> intra_delays_ns, double gamma_ns, double sigma_u_db,
                                       double pi0, double cluster_power_mw, Rng &rng);

// i.i.d. U[0, 2 pi).
std::vector<double> gen_phases(int count, Rng &rng);

// Lobe i azimuth ~ U(360(i-1)/L, 360 i/L); elevation ~ N(mean, sigma), clamped to [-90, 90].
std::vector<SpatialLobe> gen_lobe_angles(int n_lobes, LobeKind kind, double elev_mean_deg, double elev_sigma_deg,
                                         Rng &rng);

struct OffsetSigmas {
    double aod_az_deg = 0.0;
    double aod_el_deg = 0.0;
    double aoa_az_deg = 0.0;
    double aoa_el_deg = 0.0; // standard deviation of the Laplacian offset
};

OffsetSigmas offset_sigmas(const ScenarioParams &params);

/// Assigns each subpath a uniformly chosen AOD and AOA lobe, then draws its
/// angular offsets about the lobe means. All lobe indices are drawn first
/// (AOD then AOA per subpath), then all offsets (AOD az, AOD el, AOA az, AOA el
/// per subpath). Azimuths wrap into [0, 360); elevations clamp to [-90, 90].
void assign_subpath_angles(std::vector<TimeCluster> &clusters, std::span<const SpatialLobe> aod_lobes,
                           std::span<const SpatialLobe> aoa_lobes, const OffsetSigmas &sigmas, Rng &rng);

/// Draws a full realization without the dynamic-range cut.
///
/// Draw order: distance, shadow, (N, L_AOD, L_AOA), M_n, per-cluster X,
/// cluster delay exponentials, Z_n, U_{m,n}, phases, AOD lobes, AOA lobes,
/// lobe assignments, angular offsets.
OmniChannel generate_channel_unthresholded(const GenerationConfig &config, Rng &rng);

// Removes subpaths whose implied path loss (Pt - subpath power) exceeds max_path_loss_db.
void apply_dynamic_range(OmniChannel &channel, double max_path_loss_db);

OmniChannel generate_channel(const GenerationConfig &config, Rng &rng);

} // namespace sscm

#endif
