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

#ifndef SSCM_ENSEMBLE_HPP
#define SSCM_ENSEMBLE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sscm/antenna.hpp"
#include "sscm/generator.hpp"
#include "sscm/stats.hpp"

namespace sscm {

enum class PointingMode { Best, Explicit };

struct AntennaConfig {
    double tx_az_hpbw_deg = 10.0;
    double tx_el_hpbw_deg = 7.0;
    double rx_az_hpbw_deg = 10.0;
    double rx_el_hpbw_deg = 7.0;
    double efficiency = 0.7;
    PointingMode pointing = PointingMode::Best;
    Pointing tx_pointing;
    Pointing rx_pointing;
};

struct EmitFlags {
    bool pdp = false;
    bool spectrum = false;
    bool stats = true;
    bool cdf = true;
};

/// Full description of an ensemble run.
///
/// `tx_power_dbm` only affects which subpaths fall under the 180 dB dynamic
/// range; delay and angle statistics are otherwise independent of it.
struct RunConfig {
    ScenarioKey scenario_key = ScenarioKey::NLOS_28_73;
    double carrier_frequency_hz = 28e9;
    double tx_power_dbm = 30.0;
    int n_realizations = 10000;
    std::uint64_t master_seed = 42;
    std::optional<DistanceRange> distance;
    std::optional<double> ple;
    nlohmann::json param_overrides = nlohmann::json::object();
    AntennaConfig antenna;
    LobeOptions lobe{-10.0, 1.0, 10.0};
    // Directional delay-spread check: the first `directional_count` non-outage
    // realizations, beam-aligned, for each symmetric beamwidth below.
    int directional_count = 20;
    std::vector<double> directional_hpbws_deg{7.0, 10.0, 30.0};
    std::filesystem::path output_dir;
    EmitFlags emit;
    // 0 = hardware concurrency.
    unsigned threads = 0;

    void validate() const;
    GenerationConfig generation_config() const;
};

// Fields present in the JSON object override `base`. Throws ConfigError.
RunConfig run_config_from_json(const nlohmann::json &j, RunConfig base = {});
nlohmann::json run_config_to_json(const RunConfig &config);

struct RealizationStats {
    std::uint64_t index = 0;
    bool outage = false;
    double distance_m = 0.0;
    double pr_dbm = 0.0;
    int n_clusters = 0;
    int n_subpaths_total = 0;
    double rms_ds_ns = 0.0;
    double global_as_aod_az = 0.0;
    double global_as_aoa_az = 0.0;
    double global_as_aod_el = 0.0;
    double global_as_aoa_el = 0.0;
    std::vector<LobeStats> aod_lobes;
    std::vector<LobeStats> aoa_lobes;
};

// The channel drawn for realization `index` of an ensemble.
OmniChannel realization(const GenerationConfig &gen, std::uint64_t master_seed, std::uint64_t index);

RealizationStats realization_stats(const OmniChannel &channel, std::uint64_t index, const LobeOptions &lobe);

struct EnsembleReport {
    RunConfig config;
    std::vector<RealizationStats> realizations; // ordered by index
    int outage_count = 0;
    std::map<std::string, double> metrics;

    nlohmann::json summary_json() const;
};

/// Generates `n_realizations` channels on independent substreams and reduces
/// their statistics. Results are identical for any thread count.
EnsembleReport run_ensemble(const RunConfig &config);

std::string stats_csv(const EnsembleReport &report);

// Writes report.json, stats.csv and CDF files according to config.emit. Throws IoError.
void write_report(const EnsembleReport &report, const std::filesystem::path &dir);

struct Expectation {
    std::string metric;
    double expected = 0.0;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
};

std::vector<Expectation> expectations_from_json(const nlohmann::json &j);

struct ValidationLine {
    std::string metric;
    double expected = 0.0;
    std::optional<double> observed;
    double lower = 0.0;
    double upper = 0.0;
    bool pass = false;
};

struct ValidationSummary {
    std::vector<ValidationLine> lines;
    bool pass = true;
    std::vector<std::string> warnings;
};

ValidationSummary validate(const std::map<std::string, double> &metrics, const std::vector<Expectation> &expectations);

} // namespace sscm

#endif
