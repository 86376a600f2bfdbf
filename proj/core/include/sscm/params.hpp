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

#ifndef SSCM_PARAMS_HPP
#define SSCM_PARAMS_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace sscm {

enum class Environment { LOS, NLOS };

// Frequency scenarios with a published parameter column.
enum class ScenarioKey { LOS_28_73, NLOS_28, NLOS_73, NLOS_28_73 };

// Bands with measured path loss exponents.
enum class Band { GHz28, GHz73 };

std::string to_string(Environment env);
std::string to_string(ScenarioKey key);
std::string to_string(Band band);

// Accepts "los-28-73", "LOS_28_73", "nlos-28", ... (case-insensitive, '-' or '_').
ScenarioKey parse_scenario_key(std::string_view text);
Environment parse_environment(std::string_view text);

Environment environment_of(ScenarioKey key);

struct FrequencyScenario {
    double carrier_frequency_hz = 28e9;
    Environment environment = Environment::NLOS;
    ScenarioKey scenario_key = ScenarioKey::NLOS_28;

    // Throws ConfigError unless 6 GHz <= f <= 100 GHz and the key matches the environment.
    void validate() const;
};

// Nearest measured band to a carrier frequency (split at the midpoint of 28 and 73 GHz).
Band nearest_band(double carrier_frequency_hz);

struct PathLossParams {
    double ple = 2.0;             // path loss exponent n
    double shadow_sigma_db = 0.0; // shadow factor sigma
    double ref_distance_m = 1.0;  // d0, fixed

    void validate() const;
    friend bool operator==(const PathLossParams &, const PathLossParams &) = default;
};

PathLossParams lookup_pathloss(Band band, Environment environment);

/// Every constant consumed by the generator for one frequency scenario.
///
/// The built-in presets are the published per-scenario columns. All fields are
/// plain data; callers may override any of them before generation.
struct ScenarioParams {
    // lobe counts
    double mu_aod = 1.0;
    double mu_aoa = 1.0;
    // intra-cluster delay exponent bound
    double x_max = 0.0;
    // cluster delays and powers
    double mu_tau_ns = 1.0;
    double gamma_cluster_ns = 1.0;
    double sigma_z_db = 0.0;
    // subpath powers
    double gamma_subpath_ns = 1.0;
    double sigma_u_db = 0.0;
    // lobe mean elevations, degrees
    double lobe_elev_aod_mean_deg = 0.0;
    double lobe_elev_aod_sigma_deg = 0.0;
    double lobe_elev_aoa_mean_deg = 0.0;
    double lobe_elev_aoa_sigma_deg = 0.0;
    // subpath angular offsets within a lobe, degrees (AOA elevation is Laplacian)
    double offset_az_aod_deg = 0.0;
    double offset_el_aod_deg = 0.0;
    double offset_az_aoa_deg = 0.0;
    double offset_el_aoa_deg = 0.0;
    // structural limits
    int n_max_clusters = 6;
    int m_max_subpaths = 30;
    int l_max_lobes = 5;
    double min_void_ns = 25.0;
    double baseband_bw_hz = 400e6;
    double max_path_loss_db = 180.0;
    // mean first-cluster / first-subpath powers; cancel in normalization
    double p0_avg = 1.0;
    double pi0_avg = 1.0;

    // Throws ConfigError on any field outside its admissible range.
    void validate() const;
    friend bool operator==(const ScenarioParams &, const ScenarioParams &) = default;
};

ScenarioParams lookup_scenario(ScenarioKey key);

nlohmann::json to_json(const ScenarioParams &params);

// Fields present in `overrides` replace those of `base`; unknown keys are a ConfigError.
ScenarioParams apply_overrides(const ScenarioParams &base, const nlohmann::json &overrides);

} // namespace sscm

#endif
