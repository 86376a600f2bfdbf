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

#include "sscm/params.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "sscm/error.hpp"

namespace sscm {

namespace {

std::string normalize_token(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '-')
            c = '_';
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

std::string to_string(Environment env)
{
    return env == Environment::LOS ? "LOS" : "NLOS";
}

std::string to_string(ScenarioKey key)
{
    switch (key) {
    case ScenarioKey::LOS_28_73: return "LOS_28_73";
    case ScenarioKey::NLOS_28: return "NLOS_28";
    case ScenarioKey::NLOS_73: return "NLOS_73";
    case ScenarioKey::NLOS_28_73: return "NLOS_28_73";
    }
    throw ConfigError("unknown scenario key");
}

std::string to_string(Band band)
{
    return band == Band::GHz28 ? "28GHz" : "73GHz";
}

ScenarioKey parse_scenario_key(std::string_view text)
{
    const std::string t = normalize_token(text);
    if (t == "LOS_28_73")
        return ScenarioKey::LOS_28_73;
    if (t == "NLOS_28")
        return ScenarioKey::NLOS_28;
    if (t == "NLOS_73")
        return ScenarioKey::NLOS_73;
    if (t == "NLOS_28_73")
        return ScenarioKey::NLOS_28_73;
    throw ConfigError("unknown scenario '" + std::string(text) + "'");
}

Environment parse_environment(std::string_view text)
{
    const std::string t = normalize_token(text);
    if (t == "LOS")
        return Environment::LOS;
    if (t == "NLOS")
        return Environment::NLOS;
    throw ConfigError("unknown environment '" + std::string(text) + "'");
}

Environment environment_of(ScenarioKey key)
{
    return key == ScenarioKey::LOS_28_73 ? Environment::LOS : Environment::NLOS;
}

void FrequencyScenario::validate() const
{
    if (!(carrier_frequency_hz >= 6e9 && carrier_frequency_hz <= 100e9))
        throw ConfigError("carrier frequency must lie in [6, 100] GHz");
    if (environment_of(scenario_key) != environment)
        throw ConfigError("scenario " + to_string(scenario_key) + " is inconsistent with environment " +
                          to_string(environment));
}

Band nearest_band(double carrier_frequency_hz)
{
    return carrier_frequency_hz < 50.5e9 ? Band::GHz28 : Band::GHz73;
}

void PathLossParams::validate() const
{
    if (!(ple >= 1.0))
        throw ConfigError("path loss exponent must be >= 1");
    if (!(shadow_sigma_db >= 0.0))
        throw ConfigError("shadow factor must be >= 0 dB");
    if (ref_distance_m != 1.0)
        throw ConfigError("reference distance is fixed at 1 m");
}

PathLossParams lookup_pathloss(Band band, Environment environment)
{
    if (band == Band::GHz28)
        return environment == Environment::LOS ? PathLossParams{2.1, 3.6, 1.0} : PathLossParams{3.4, 9.7, 1.0};
    return environment == Environment::LOS ? PathLossParams{2.0, 5.2, 1.0} : PathLossParams{3.3, 7.6, 1.0};
}

ScenarioParams lookup_scenario(ScenarioKey key)
{
    ScenarioParams p;
    switch (key) {
    case ScenarioKey::LOS_28_73:
        p.mu_aod = 1.9;
        p.mu_aoa = 1.8;
        p.x_max = 0.2;
        p.mu_tau_ns = 123.0;
        p.gamma_cluster_ns = 25.9;
        p.sigma_z_db = 1.0;
        p.gamma_subpath_ns = 16.9;
        p.sigma_u_db = 6.0;
        p.lobe_elev_aod_mean_deg = -12.6;
        p.lobe_elev_aod_sigma_deg = 5.9;
        p.lobe_elev_aoa_mean_deg = 10.8;
        p.lobe_elev_aoa_sigma_deg = 5.3;
        p.offset_az_aod_deg = 8.5;
        p.offset_el_aod_deg = 2.5;
        p.offset_az_aoa_deg = 10.5;
        p.offset_el_aoa_deg = 11.5;
        break;
    case ScenarioKey::NLOS_28:
        p.mu_aod = 1.6;
        p.mu_aoa = 1.6;
        p.x_max = 0.5;
        p.mu_tau_ns = 83.0;
        p.gamma_cluster_ns = 49.4;
        p.sigma_z_db = 3.0;
        p.gamma_subpath_ns = 16.9;
        p.sigma_u_db = 6.0;
        p.lobe_elev_aod_mean_deg = -4.9;
        p.lobe_elev_aod_sigma_deg = 4.5;
        p.lobe_elev_aoa_mean_deg = 3.6;
        p.lobe_elev_aoa_sigma_deg = 4.8;
        p.offset_az_aod_deg = 9.0;
        p.offset_el_aod_deg = 2.5;
        p.offset_az_aoa_deg = 10.1;
        p.offset_el_aoa_deg = 10.5;
        break;
    case ScenarioKey::NLOS_73:
        p.mu_aod = 1.5;
        p.mu_aoa = 2.5;
        p.x_max = 0.5;
        p.mu_tau_ns = 83.0;
        p.gamma_cluster_ns = 56.0;
        p.sigma_z_db = 3.0;
        p.gamma_subpath_ns = 15.3;
        p.sigma_u_db = 6.0;
        p.lobe_elev_aod_mean_deg = -4.9;
        p.lobe_elev_aod_sigma_deg = 4.5;
        p.lobe_elev_aoa_mean_deg = 3.6;
        p.lobe_elev_aoa_sigma_deg = 4.8;
        p.offset_az_aod_deg = 7.0;
        p.offset_el_aod_deg = 3.5;
        p.offset_az_aoa_deg = 6.0;
        p.offset_el_aoa_deg = 3.5;
        break;
    case ScenarioKey::NLOS_28_73:
        p.mu_aod = 1.5;
        p.mu_aoa = 2.1;
        p.x_max = 0.5;
        p.mu_tau_ns = 83.0;
        p.gamma_cluster_ns = 51.0;
        p.sigma_z_db = 3.0;
        p.gamma_subpath_ns = 15.5;
        p.sigma_u_db = 6.0;
        p.lobe_elev_aod_mean_deg = -4.9;
        p.lobe_elev_aod_sigma_deg = 4.5;
        p.lobe_elev_aoa_mean_deg = 3.6;
        p.lobe_elev_aoa_sigma_deg = 4.8;
        p.offset_az_aod_deg = 11.0;
        p.offset_el_aod_deg = 3.0;
        p.offset_az_aoa_deg = 7.5;
        p.offset_el_aoa_deg = 6.0;
        break;
    default:
        throw ConfigError("unknown scenario key");
    }
    return p;
}

void ScenarioParams::validate() const
{
    auto require = [](bool ok, const char *what) {
        if (!ok)
            throw ConfigError(std::string("invalid scenario parameter: ") + what);
    };
    require(mu_aod > 0.0 && mu_aoa > 0.0, "mean lobe counts must be positive");
    require(x_max >= 0.0 && x_max <= 1.0, "x_max must lie in [0, 1]");
    require(mu_tau_ns > 0.0, "mu_tau_ns must be positive");
    require(gamma_cluster_ns > 0.0, "gamma_cluster_ns must be positive");
    require(gamma_subpath_ns > 0.0, "gamma_subpath_ns must be positive");
    require(sigma_z_db >= 0.0 && sigma_u_db >= 0.0, "power shadowing sigmas must be >= 0");
    require(lobe_elev_aod_sigma_deg >= 0.0 && lobe_elev_aoa_sigma_deg >= 0.0, "lobe elevation sigmas must be >= 0");
    require(offset_az_aod_deg >= 0.0 && offset_el_aod_deg >= 0.0 && offset_az_aoa_deg >= 0.0 &&
                offset_el_aoa_deg >= 0.0,
            "angular offset sigmas must be >= 0");
    require(n_max_clusters >= 1, "n_max_clusters must be >= 1");
    require(m_max_subpaths >= 1, "m_max_subpaths must be >= 1");
    require(l_max_lobes >= 1, "l_max_lobes must be >= 1");
    require(min_void_ns >= 0.0, "min_void_ns must be >= 0");
    require(baseband_bw_hz > 0.0 && baseband_bw_hz <= 4e8, "baseband_bw_hz must lie in (0, 400 MHz]");
    require(p0_avg > 0.0 && pi0_avg > 0.0, "p0_avg and pi0_avg must be positive");
}

namespace {

// Field table shared by serialization and override parsing.
template <typename Fn>
void for_each_field(ScenarioParams &p, Fn &&fn)
{
    fn("mu_aod", p.mu_aod);
    fn("mu_aoa", p.mu_aoa);
    fn("x_max", p.x_max);
    fn("mu_tau_ns", p.mu_tau_ns);
    fn("gamma_cluster_ns", p.gamma_cluster_ns);
    fn("sigma_z_db", p.sigma_z_db);
    fn("gamma_subpath_ns", p.gamma_subpath_ns);
    fn("sigma_u_db", p.sigma_u_db);
    fn("lobe_elev_aod_mean_deg", p.lobe_elev_aod_mean_deg);
    fn("lobe_elev_aod_sigma_deg", p.lobe_elev_aod_sigma_deg);
    fn("lobe_elev_aoa_mean_deg", p.lobe_elev_aoa_mean_deg);
    fn("lobe_elev_aoa_sigma_deg", p.lobe_elev_aoa_sigma_deg);
    fn("offset_az_aod_deg", p.offset_az_aod_deg);
    fn("offset_el_aod_deg", p.offset_el_aod_deg);
    fn("offset_az_aoa_deg", p.offset_az_aoa_deg);
    fn("offset_el_aoa_deg", p.offset_el_aoa_deg);
    fn("n_max_clusters", p.n_max_clusters);
    fn("m_max_subpaths", p.m_max_subpaths);
    fn("l_max_lobes", p.l_max_lobes);
    fn("min_void_ns", p.min_void_ns);
    fn("baseband_bw_hz", p.baseband_bw_hz);
    fn("max_path_loss_db", p.max_path_loss_db);
    fn("p0_avg", p.p0_avg);
    fn("pi0_avg", p.pi0_avg);
}

} // namespace

nlohmann::json to_json(const ScenarioParams &params)
{
    nlohmann::json j = nlohmann::json::object();
    ScenarioParams copy = params;
    for_each_field(copy, [&](const char *name, auto &value) { j[name] = value; });
    return j;
}

ScenarioParams apply_overrides(const ScenarioParams &base, const nlohmann::json &overrides)
{
    if (!overrides.is_object())
        throw ConfigError("scenario overrides must be a JSON object");
    ScenarioParams out = base;
    std::size_t consumed = 0;
    for_each_field(out, [&](const char *name, auto &value) {
        const auto it = overrides.find(name);
        if (it == overrides.end())
            return;
        ++consumed;
        if (!it->is_number())
            throw ConfigError(std::string("override '") + name + "' must be numeric");
        using T = std::remove_reference_t<decltype(value)>;
        if constexpr (std::is_integral_v<T>) {
            if (!it->is_number_integer())
                throw ConfigError(std::string("override '") + name + "' must be an integer");
        }
        value = it->template get<T>();
    });
    if (consumed != overrides.size()) {
        for (const auto &[key, unused] : overrides.items()) {
            bool known = false;
            for_each_field(out, [&](const char *name, auto &) { known = known || key == name; });
            if (!known)
                throw ConfigError("unknown scenario parameter '" + key + "'");
        }
    }
    return out;
}

} // namespace sscm
