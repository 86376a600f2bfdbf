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

#include "sscm/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "sscm/error.hpp"
#include "sscm/pathloss.hpp"

namespace sscm {

DistanceRange default_distance_range(Environment env)
{
    return env == Environment::LOS ? DistanceRange{30.0, 60.0} : DistanceRange{60.0, 200.0};
}

void GenerationConfig::validate() const
{
    scenario.validate();
    params.validate();
    pathloss.validate();
    if (!(distance.d_min_m > 0.0 && distance.d_max_m >= distance.d_min_m))
        throw ConfigError("distance range must satisfy 0 < d_min <= d_max");
    if (distance.d_min_m < pathloss.ref_distance_m)
        throw ConfigError("minimum distance must be >= the 1 m reference distance");
    if (!std::isfinite(tx_power_dbm))
        throw ConfigError("transmit power must be finite");
}

GenerationConfig make_generation_config(ScenarioKey key, double carrier_frequency_hz)
{
    GenerationConfig cfg;
    cfg.scenario = FrequencyScenario{carrier_frequency_hz, environment_of(key), key};
    cfg.params = lookup_scenario(key);
    cfg.pathloss = lookup_pathloss(nearest_band(carrier_frequency_hz), environment_of(key));
    if (environment_of(key) == Environment::LOS)
        cfg.pathloss.ple = 2.0;
    cfg.distance = default_distance_range(environment_of(key));
    return cfg;
}

double draw_distance(const DistanceRange &range, Rng &rng)
{
    if (!(range.d_min_m > 0.0 && range.d_max_m >= range.d_min_m))
        throw ConfigError("distance range must satisfy 0 < d_min <= d_max");
    return rng.uniform(range.d_min_m, range.d_max_m);
}

int clamp_lobe_count(int poisson_draw, int l_max)
{
    return std::min(l_max, std::max(1, poisson_draw));
}

ChannelCounts draw_counts(const ScenarioParams &params, Rng &rng)
{
    ChannelCounts c;
    c.n_clusters = rng.discrete_uniform(1, params.n_max_clusters);
    c.l_aod = clamp_lobe_count(rng.poisson(params.mu_aod), params.l_max_lobes);
    c.l_aoa = clamp_lobe_count(rng.poisson(params.mu_aoa), params.l_max_lobes);
    return c;
}

std::vector<int> draw_subpath_counts(int n_clusters, int m_max, Rng &rng)
{
    std::vector<int> counts(static_cast<std::size_t>(n_clusters));
    for (auto &m : counts)
        m = rng.discrete_uniform(1, m_max);
    return counts;
}

std::vector<double> intra_delays_for_exponent(int count, double baseband_bw_hz, double x)
{
    const double resolution_ns = 1e9 / baseband_bw_hz;
    std::vector<double> rho(static_cast<std::size_t>(count));
    for (int m = 1; m <= count; ++m)
        rho[static_cast<std::size_t>(m - 1)] = std::pow(resolution_ns * (m - 1), 1.0 + x);
    return rho;
}

std::vector<double> gen_intra_delays(int count, double baseband_bw_hz, double x_max, Rng &rng)
{
    const double x = rng.uniform(0.0, x_max);
    return intra_delays_for_exponent(count, baseband_bw_hz, x);
}

std::vector<double> cluster_delays_from_offsets(std::span<const double> sorted_offsets,
                                                std::span<const double> last_intra_delays, double min_void_ns)
{
    const std::size_t n = sorted_offsets.size();
    std::vector<double> tau(n, 0.0);
    for (std::size_t k = 1; k < n; ++k)
        tau[k] = tau[k - 1] + last_intra_delays[k - 1] + sorted_offsets[k] + min_void_ns;
    return tau;
}

std::vector<double> gen_cluster_delays(int n_clusters, double mu_tau_ns, std::span<const double> last_intra_delays,
                                       double min_void_ns, Rng &rng)
{
    std::vector<double> raw(static_cast<std::size_t>(n_clusters));
    for (auto &t : raw)
        t = rng.exponential_mean(mu_tau_ns);
    std::sort(raw.begin(), raw.end());
    const double first = raw.front();
    for (auto &t : raw)
        t -= first;
    return cluster_delays_from_offsets(raw, last_intra_delays, min_void_ns);
}

std::vector<double> normalized_decay_powers(std::span<const double> delays_ns, double decay_ns,
                                            std::span<const double> shadows_db, double p0, double total_mw)
{
    std::vector<double> p(delays_ns.size());
    for (std::size_t k = 0; k < p.size(); ++k)
        p[k] = p0 * std::exp(-delays_ns[k] / decay_ns) * std::pow(10.0, shadows_db[k] / 10.0);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto &v : p)
        v = v / sum * total_mw;
    return p;
}

namespace {

std::vector<double> draw_db_shadows(std::size_t count, double sigma_db, Rng &rng)
{
    std::vector<double> z(count);
    for (auto &v : z)
        v = rng.normal(0.0, sigma_db);
    return z;
}

} // namespace

std::vector<double> gen_cluster_powers(std::span<const double> cluster_delays_ns, double gamma_ns, double sigma_z_db,
                                       double p0, double rx_power_mw, Rng &rng)
{
    const auto z = draw_db_shadows(cluster_delays_ns.size(), sigma_z_db, rng);
    return normalized_decay_powers(cluster_delays_ns, gamma_ns, z, p0, rx_power_mw);
}

std::vector<double> gen_subpath_powers(std::span<const double> intra_delays_ns, double gamma_ns, double sigma_u_db,
                                       double pi0, double cluster_power_mw, Rng &rng)
{
    const auto u = draw_db_shadows(intra_delays_ns.size(), sigma_u_db, rng);
    return normalized_decay_powers(intra_delays_ns, gamma_ns, u, pi0, cluster_power_mw);
}

std::vector<double> gen_phases(int count, Rng &rng)
{
    std::vector<double> phases(static_cast<std::size_t>(count));
    for (auto &p : phases)
        p = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return phases;
}

std::vector<SpatialLobe> gen_lobe_angles(int n_lobes, LobeKind kind, double elev_mean_deg, double elev_sigma_deg,
                                         Rng &rng)
{
    std::vector<SpatialLobe> lobes;
    lobes.reserve(static_cast<std::size_t>(n_lobes));
    const double sector = 360.0 / n_lobes;
    for (int i = 1; i <= n_lobes; ++i) {
        SpatialLobe lobe;
        lobe.kind = kind;
        lobe.index = i;
        lobe.mean_az_deg = rng.uniform(sector * (i - 1), sector * i);
        lobe.mean_el_deg = clamp_elevation_deg(rng.normal(elev_mean_deg, elev_sigma_deg));
        lobes.push_back(lobe);
    }
    return lobes;
}

OffsetSigmas offset_sigmas(const ScenarioParams &params)
{
    return {params.offset_az_aod_deg, params.offset_el_aod_deg, params.offset_az_aoa_deg, params.offset_el_aoa_deg};
}

void assign_subpath_angles(std::vector<TimeCluster> &clusters, std::span<const SpatialLobe> aod_lobes,
                           std::span<const SpatialLobe> aoa_lobes, const OffsetSigmas &sigmas, Rng &rng)
{
    const int l_aod = static_cast<int>(aod_lobes.size());
    const int l_aoa = static_cast<int>(aoa_lobes.size());
    for (auto &c : clusters) {
        for (auto &s : c.subpaths) {
            s.aod_lobe = rng.discrete_uniform(1, l_aod);
            s.aoa_lobe = rng.discrete_uniform(1, l_aoa);
        }
    }
    for (auto &c : clusters) {
        for (auto &s : c.subpaths) {
            const SpatialLobe &tx = aod_lobes[static_cast<std::size_t>(s.aod_lobe - 1)];
            const SpatialLobe &rx = aoa_lobes[static_cast<std::size_t>(s.aoa_lobe - 1)];
            const double d_aod_az = rng.normal(0.0, sigmas.aod_az_deg);
            const double d_aod_el = rng.normal(0.0, sigmas.aod_el_deg);
            const double d_aoa_az = rng.normal(0.0, sigmas.aoa_az_deg);
            const double d_aoa_el = rng.laplace_std(sigmas.aoa_el_deg);
            s.aod_az_deg = wrap_azimuth_deg(tx.mean_az_deg + d_aod_az);
            s.aod_el_deg = clamp_elevation_deg(tx.mean_el_deg + d_aod_el);
            s.aoa_az_deg = wrap_azimuth_deg(rx.mean_az_deg + d_aoa_az);
            s.aoa_el_deg = clamp_elevation_deg(rx.mean_el_deg + d_aoa_el);
        }
    }
}

OmniChannel generate_channel_unthresholded(const GenerationConfig &config, Rng &rng)
{
    config.validate();
    const ScenarioParams &p = config.params;

    OmniChannel ch;
    ch.tx_power_dbm = config.tx_power_dbm;

    // Steps 1-2
    ch.distance_m = draw_distance(config.distance, rng);
    ch.shadow_db = draw_shadow(config.pathloss.shadow_sigma_db, rng);
    ch.path_loss_db = path_loss(config.pathloss, config.scenario.carrier_frequency_hz, ch.distance_m, ch.shadow_db);
    ch.rx_power_mw = dbm_to_mw(received_power(config.tx_power_dbm, ch.path_loss_db));
    ch.t0_ns = ch.distance_m / kSpeedOfLight * 1e9;

    // Steps 3-5
    const ChannelCounts counts = draw_counts(p, rng);
    const std::vector<int> m_n = draw_subpath_counts(counts.n_clusters, p.m_max_subpaths, rng);
    std::vector<std::vector<double>> rho;
    rho.reserve(m_n.size());
    for (int m : m_n)
        rho.push_back(gen_intra_delays(m, p.baseband_bw_hz, p.x_max, rng));
    std::vector<double> last_rho;
    for (const auto &r : rho)
        last_rho.push_back(r.back());

    // Steps 6-8
    const auto tau = gen_cluster_delays(counts.n_clusters, p.mu_tau_ns, last_rho, p.min_void_ns, rng);
    const auto cluster_power = gen_cluster_powers(tau, p.gamma_cluster_ns, p.sigma_z_db, p.p0_avg, ch.rx_power_mw, rng);
    std::vector<std::vector<double>> subpath_power;
    subpath_power.reserve(rho.size());
    for (std::size_t n = 0; n < rho.size(); ++n)
        subpath_power.push_back(
            gen_subpath_powers(rho[n], p.gamma_subpath_ns, p.sigma_u_db, p.pi0_avg, cluster_power[n], rng));

    ch.clusters.resize(rho.size());
    for (std::size_t n = 0; n < rho.size(); ++n) {
        TimeCluster &c = ch.clusters[n];
        c.index = static_cast<int>(n + 1);
        c.excess_delay_ns = tau[n];
        c.power_mw = cluster_power[n];
        c.subpaths.resize(rho[n].size());
        for (std::size_t m = 0; m < rho[n].size(); ++m) {
            Subpath &s = c.subpaths[m];
            s.cluster = c.index;
            s.index = static_cast<int>(m + 1);
            s.intra_delay_ns = rho[n][m];
            s.power_mw = subpath_power[n][m];
            s.amplitude = std::sqrt(s.power_mw);
        }
    }

    // Steps 9-10
    for (auto &c : ch.clusters) {
        const auto phases = gen_phases(static_cast<int>(c.subpaths.size()), rng);
        for (std::size_t m = 0; m < c.subpaths.size(); ++m) {
            Subpath &s = c.subpaths[m];
            s.phase_rad = phases[m];
            s.abs_delay_ns = ch.t0_ns + c.excess_delay_ns + s.intra_delay_ns;
        }
    }

    // Steps 11-12
    ch.aod_lobes = gen_lobe_angles(counts.l_aod, LobeKind::AOD, p.lobe_elev_aod_mean_deg, p.lobe_elev_aod_sigma_deg, rng);
    ch.aoa_lobes = gen_lobe_angles(counts.l_aoa, LobeKind::AOA, p.lobe_elev_aoa_mean_deg, p.lobe_elev_aoa_sigma_deg, rng);
    assign_subpath_angles(ch.clusters, ch.aod_lobes, ch.aoa_lobes, offset_sigmas(p), rng);
    return ch;
}

void apply_dynamic_range(OmniChannel &channel, double max_path_loss_db)
{
    for (auto &c : channel.clusters) {
        const auto before = c.subpaths.size();
        std::erase_if(c.subpaths, [&](const Subpath &s) {
            return channel.tx_power_dbm - mw_to_dbm(s.power_mw) > max_path_loss_db;
        });
        channel.n_thresholded += static_cast<int>(before - c.subpaths.size());
    }
    std::erase_if(channel.clusters, [](const TimeCluster &c) { return c.subpaths.empty(); });
    channel.outage = channel.clusters.empty();
}

OmniChannel generate_channel(const GenerationConfig &config, Rng &rng)
{
    OmniChannel ch = generate_channel_unthresholded(config, rng);
    apply_dynamic_range(ch, config.params.max_path_loss_db);
    return ch;
}

} // namespace sscm
