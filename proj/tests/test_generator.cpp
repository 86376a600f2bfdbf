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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "oracles/oracles.hpp"
#include "sscm/error.hpp"
#include "sscm/generator.hpp"
#include "sscm/pathloss.hpp"

using namespace sscm;

namespace {

constexpr std::array kAllScenarios{ScenarioKey::LOS_28_73, ScenarioKey::NLOS_28, ScenarioKey::NLOS_73,
                                   ScenarioKey::NLOS_28_73};

double rel_err(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

} // namespace

TEST(Distance, DefaultRangesAreRespected)
{
    Rng rng(1);
    for (int i = 0; i < 10000; ++i) {
        const double los = draw_distance(default_distance_range(Environment::LOS), rng);
        EXPECT_GE(los, 30.0);
        EXPECT_LE(los, 60.0);
        const double nlos = draw_distance(default_distance_range(Environment::NLOS), rng);
        EXPECT_GE(nlos, 60.0);
        EXPECT_LE(nlos, 200.0);
    }
}

TEST(Distance, DegenerateAndInvalidRanges)
{
    Rng rng(1);
    EXPECT_EQ(draw_distance({100.0, 100.0}, rng), 100.0);
    EXPECT_THROW(draw_distance({50.0, 20.0}, rng), ConfigError);
    EXPECT_THROW(draw_distance({0.0, 20.0}, rng), ConfigError);
}

TEST(Counts, LobeClamp)
{
    EXPECT_EQ(clamp_lobe_count(0, 5), 1);
    EXPECT_EQ(clamp_lobe_count(3, 5), 3);
    EXPECT_EQ(clamp_lobe_count(11, 5), 5);
}

TEST(Counts, BoundsAndTruncatedPoissonMean)
{
    const auto p = lookup_scenario(ScenarioKey::NLOS_73);
    Rng rng(73);
    constexpr int n = 1'000'000;
    double sum_aoa = 0;
    for (int i = 0; i < n; ++i) {
        const auto c = draw_counts(p, rng);
        ASSERT_GE(c.n_clusters, 1);
        ASSERT_LE(c.n_clusters, 6);
        ASSERT_GE(c.l_aod, 1);
        ASSERT_LE(c.l_aod, 5);
        ASSERT_GE(c.l_aoa, 1);
        ASSERT_LE(c.l_aoa, 5);
        sum_aoa += c.l_aoa;
    }
    const double expected = oracle::truncated_poisson_mean(2.5, 5);
    EXPECT_LT(rel_err(sum_aoa / n, expected), 0.01);
}

TEST(SubpathCounts, MeanAndUniformity)
{
    Rng rng(30);
    EXPECT_EQ(draw_subpath_counts(3, 30, rng).size(), 3u);
    std::array<long, 30> hist{};
    constexpr int n = 1'000'000;
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        const int m = draw_subpath_counts(1, 30, rng)[0];
        ASSERT_GE(m, 1);
        ASSERT_LE(m, 30);
        ++hist[static_cast<std::size_t>(m - 1)];
        sum += m;
    }
    EXPECT_NEAR(sum / n, 15.5, 0.05);
    const double e = n / 30.0;
    double chi2 = 0;
    for (long h : hist)
        chi2 += (h - e) * (h - e) / e;
    EXPECT_LT(chi2, oracle::kChiSquare99Dof29);
}

TEST(IntraDelays, Examples)
{
    const auto zero = intra_delays_for_exponent(3, 400e6, 0.0);
    EXPECT_EQ(zero[0], 0.0);
    EXPECT_NEAR(zero[1], 2.5, 1e-12);
    const auto half = intra_delays_for_exponent(3, 400e6, 0.5);
    EXPECT_NEAR(half[2], 11.180339887498949, 1e-9);
}

TEST(IntraDelays, StrictlyIncreasingFromZero)
{
    Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto rho = gen_intra_delays(30, 400e6, 0.5, rng);
        EXPECT_EQ(rho[0], 0.0);
        for (std::size_t m = 1; m < rho.size(); ++m)
            EXPECT_GT(rho[m], rho[m - 1]);
    }
}

TEST(ClusterDelays, Examples)
{
    Rng rng(1);
    EXPECT_EQ(gen_cluster_delays(1, 83.0, std::vector<double>{12.0}, 25.0, rng), std::vector<double>{0.0});
    const std::vector<double> offsets{0.0, 0.0};
    const std::vector<double> last{10.0, 3.0};
    EXPECT_EQ(cluster_delays_from_offsets(offsets, last, 25.0), (std::vector<double>{0.0, 35.0}));
}

TEST(ClusterDelays, VoidIntervalHolds)
{
    Rng rng(6);
    for (int trial = 0; trial < 5000; ++trial) {
        const std::vector<double> last{4.0, 50.0, 0.0, 17.5, 310.0, 2.5};
        const auto tau = gen_cluster_delays(6, 83.0, last, 25.0, rng);
        EXPECT_EQ(tau[0], 0.0);
        for (std::size_t n = 1; n < tau.size(); ++n)
            EXPECT_GE(tau[n] - (tau[n - 1] + last[n - 1]), 25.0 - 1e-9);
    }
}

TEST(ClusterDelays, ExponentialIsParameterizedByMean)
{
    Rng rng(83);
    std::vector<double> x(1'000'000);
    for (auto &v : x)
        v = rng.exponential_mean(83.0);
    EXPECT_LT(rel_err(oracle::sample_mean(x), 83.0), 0.01);
}

TEST(Powers, ClosedFormSplits)
{
    const std::vector<double> tau{0.0, 49.4};
    const std::vector<double> zero{0.0, 0.0};
    const auto p = normalized_decay_powers(tau, 49.4, zero, 1.0, 2.0);
    EXPECT_NEAR(p[0] / 2.0, 0.7310585786300049, 1e-12);
    EXPECT_NEAR(p[1] / 2.0, 1.0 - 0.7310585786300049, 1e-12);

    const std::vector<double> rho{0.0, 16.9};
    const auto s = normalized_decay_powers(rho, 16.9, zero, 1.0, 1e-9);
    EXPECT_NEAR(s[0] / 1e-9, 0.7310585786300049, 1e-12);

    Rng rng(3);
    EXPECT_DOUBLE_EQ(gen_cluster_powers(std::vector<double>{0.0}, 49.4, 3.0, 1.0, 4.2e-10, rng)[0], 4.2e-10);
    EXPECT_DOUBLE_EQ(gen_subpath_powers(std::vector<double>{0.0}, 16.9, 6.0, 1.0, 7e-11, rng)[0], 7e-11);
}

TEST(Powers, AverageFirstPowerCancels)
{
    const std::vector<double> tau{0.0, 30.0, 95.0};
    const std::vector<double> z{1.0, -2.0, 0.5};
    const auto a = normalized_decay_powers(tau, 51.0, z, 1.0, 1.0);
    const auto b = normalized_decay_powers(tau, 51.0, z, 123.4, 1.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_NEAR(a[i], b[i], 1e-15);
}

TEST(Powers, LognormalShadowStdWithinOnePercent)
{
    Rng rng(7);
    std::vector<double> z(1'000'000);
    for (auto &v : z)
        v = rng.normal(0.0, 3.0);
    EXPECT_LT(rel_err(oracle::sample_std(z), 3.0), 0.01);
    for (auto &v : z)
        v = rng.normal(0.0, 6.0);
    EXPECT_LT(rel_err(oracle::sample_std(z), 6.0), 0.01);
}

TEST(Phases, RangeResultantLengthAndKs)
{
    Rng rng(9);
    const auto ph = gen_phases(1'000'000, rng);
    double c = 0, s = 0;
    for (double p : ph) {
        ASSERT_GE(p, 0.0);
        ASSERT_LT(p, 2.0 * std::numbers::pi);
        c += std::cos(p);
        s += std::sin(p);
    }
    EXPECT_LT(std::hypot(c, s) / ph.size(), 0.01);

    const std::vector<double> sub(ph.begin(), ph.begin() + 100'000);
    const double d = oracle::ks_uniform(sub, 0.0, 2.0 * std::numbers::pi);
    EXPECT_LT(d * std::sqrt(100'000.0), oracle::kKolmogorov99);
}

TEST(Lobes, SectorsAreDisjoint)
{
    Rng rng(11);
    for (int L = 1; L <= 5; ++L) {
        for (int trial = 0; trial < 2000; ++trial) {
            const auto lobes = gen_lobe_angles(L, LobeKind::AOA, 3.6, 4.8, rng);
            ASSERT_EQ(static_cast<int>(lobes.size()), L);
            for (const auto &l : lobes) {
                EXPECT_GE(l.mean_az_deg, 360.0 * (l.index - 1) / L);
                EXPECT_LT(l.mean_az_deg, 360.0 * l.index / L);
                EXPECT_GE(l.mean_el_deg, -90.0);
                EXPECT_LE(l.mean_el_deg, 90.0);
            }
        }
    }
}

TEST(Lobes, ElevationMoments)
{
    Rng rng(12);
    std::vector<double> el;
    for (int i = 0; i < 200'000; ++i)
        el.push_back(gen_lobe_angles(1, LobeKind::AOD, -12.6, 5.9, rng)[0].mean_el_deg);
    EXPECT_NEAR(oracle::sample_mean(el), -12.6, 0.05);
    EXPECT_LT(rel_err(oracle::sample_std(el), 5.9), 0.01);
}

TEST(SubpathAngles, ZeroOffsetsReproduceLobeMeans)
{
    Rng rng(13);
    std::vector<TimeCluster> clusters(2);
    clusters[0].subpaths.resize(7);
    clusters[1].subpaths.resize(4);
    const auto aod = gen_lobe_angles(3, LobeKind::AOD, -4.9, 4.5, rng);
    const auto aoa = gen_lobe_angles(2, LobeKind::AOA, 3.6, 4.8, rng);
    assign_subpath_angles(clusters, aod, aoa, OffsetSigmas{}, rng);
    for (const auto &c : clusters) {
        for (const auto &s : c.subpaths) {
            const auto &tx = aod[static_cast<std::size_t>(s.aod_lobe - 1)];
            const auto &rx = aoa[static_cast<std::size_t>(s.aoa_lobe - 1)];
            EXPECT_EQ(s.aod_az_deg, tx.mean_az_deg);
            EXPECT_EQ(s.aod_el_deg, tx.mean_el_deg);
            EXPECT_EQ(s.aoa_az_deg, rx.mean_az_deg);
            EXPECT_EQ(s.aoa_el_deg, rx.mean_el_deg);
        }
    }
}

TEST(SubpathAngles, OffsetDistributions)
{
    // Lobe means at the equator and mid-circle keep wrapping and clamping out of the way.
    const std::vector<SpatialLobe> aod{{LobeKind::AOD, 1, 180.0, 0.0}};
    const std::vector<SpatialLobe> aoa{{LobeKind::AOA, 1, 180.0, 0.0}};
    const OffsetSigmas sig{11.0, 3.0, 7.5, 6.0};
    std::vector<TimeCluster> clusters(1);
    clusters[0].subpaths.resize(1'000'000);
    Rng rng(14);
    assign_subpath_angles(clusters, aod, aoa, sig, rng);
    std::vector<double> daz_tx, del_tx, daz_rx, del_rx;
    for (const auto &s : clusters[0].subpaths) {
        daz_tx.push_back(s.aod_az_deg - 180.0);
        del_tx.push_back(s.aod_el_deg);
        daz_rx.push_back(s.aoa_az_deg - 180.0);
        del_rx.push_back(s.aoa_el_deg);
    }
    EXPECT_LT(rel_err(oracle::sample_std(daz_tx), 11.0), 0.01);
    EXPECT_LT(rel_err(oracle::sample_std(del_tx), 3.0), 0.01);
    EXPECT_LT(rel_err(oracle::sample_std(daz_rx), 7.5), 0.01);
    EXPECT_LT(rel_err(oracle::sample_std(del_rx), 6.0), 0.01);
    // Laplace: E|X| = b = sigma / sqrt(2), which separates it from a Gaussian (sigma sqrt(2/pi)).
    double abs_mean = 0;
    for (double v : del_rx)
        abs_mean += std::abs(v);
    abs_mean /= static_cast<double>(del_rx.size());
    EXPECT_LT(rel_err(abs_mean, 6.0 / std::sqrt(2.0)), 0.01);
}

TEST(SubpathAngles, WrapAndClamp)
{
    const std::vector<SpatialLobe> aod{{LobeKind::AOD, 1, 359.0, 88.0}};
    const std::vector<SpatialLobe> aoa{{LobeKind::AOA, 1, 1.0, -89.0}};
    std::vector<TimeCluster> clusters(1);
    clusters[0].subpaths.resize(20000);
    Rng rng(15);
    assign_subpath_angles(clusters, aod, aoa, OffsetSigmas{10.0, 10.0, 10.0, 10.0}, rng);
    for (const auto &s : clusters[0].subpaths) {
        EXPECT_GE(s.aod_az_deg, 0.0);
        EXPECT_LT(s.aod_az_deg, 360.0);
        EXPECT_GE(s.aoa_az_deg, 0.0);
        EXPECT_LT(s.aoa_az_deg, 360.0);
        EXPECT_LE(s.aod_el_deg, 90.0);
        EXPECT_GE(s.aoa_el_deg, -90.0);
    }
}

TEST(Wrapping, Helpers)
{
    EXPECT_EQ(wrap_azimuth_deg(-10.0), 350.0);
    EXPECT_EQ(wrap_azimuth_deg(720.0), 0.0);
    EXPECT_EQ(wrap_azimuth_deg(-1e-18), 0.0);
    EXPECT_EQ(wrap_offset_deg(180.0), 180.0);
    EXPECT_EQ(wrap_offset_deg(-180.0), 180.0);
    EXPECT_EQ(wrap_offset_deg(190.0), -170.0);
    EXPECT_EQ(clamp_elevation_deg(95.0), 90.0);
}

// Structural invariants of complete realizations, before the dynamic-range cut.
TEST(Channel, InvariantsHoldForEveryRealization)
{
    for (auto key : kAllScenarios) {
        const auto cfg = make_generation_config(key, key == ScenarioKey::NLOS_73 ? 73e9 : 28e9);
        for (std::uint64_t i = 0; i < 2000; ++i) {
            Rng rng = Rng::substream(99, i);
            const OmniChannel ch = generate_channel_unthresholded(cfg, rng);
            ASSERT_GE(ch.clusters.size(), 1u);
            ASSERT_LE(ch.clusters.size(), 6u);
            ASSERT_GE(ch.aod_lobes.size(), 1u);
            ASSERT_LE(ch.aod_lobes.size(), 5u);
            ASSERT_GE(ch.aoa_lobes.size(), 1u);
            ASSERT_LE(ch.aoa_lobes.size(), 5u);
            EXPECT_NEAR(ch.t0_ns, ch.distance_m / 3e8 * 1e9, 1e-9);
            double cluster_sum = 0;
            for (std::size_t n = 0; n < ch.clusters.size(); ++n) {
                const auto &c = ch.clusters[n];
                ASSERT_GE(c.subpaths.size(), 1u);
                ASSERT_LE(c.subpaths.size(), 30u);
                cluster_sum += c.power_mw;
                double sp_sum = 0;
                EXPECT_EQ(c.subpaths[0].intra_delay_ns, 0.0);
                for (std::size_t m = 0; m < c.subpaths.size(); ++m) {
                    const auto &s = c.subpaths[m];
                    sp_sum += s.power_mw;
                    if (m > 0)
                        EXPECT_GT(s.intra_delay_ns, c.subpaths[m - 1].intra_delay_ns);
                    EXPECT_DOUBLE_EQ(s.abs_delay_ns, ch.t0_ns + c.excess_delay_ns + s.intra_delay_ns);
                    EXPECT_GE(s.abs_delay_ns, ch.t0_ns);
                    EXPECT_DOUBLE_EQ(s.amplitude * s.amplitude, s.power_mw);
                    EXPECT_GE(s.phase_rad, 0.0);
                    EXPECT_LT(s.phase_rad, 2.0 * std::numbers::pi);
                    EXPECT_GE(s.aod_az_deg, 0.0);
                    EXPECT_LT(s.aod_az_deg, 360.0);
                    EXPECT_GE(s.aoa_az_deg, 0.0);
                    EXPECT_LT(s.aoa_az_deg, 360.0);
                    EXPECT_LE(std::abs(s.aod_el_deg), 90.0);
                    EXPECT_LE(std::abs(s.aoa_el_deg), 90.0);
                }
                EXPECT_LT(rel_err(sp_sum, c.power_mw), 1e-9);
                if (n > 0) {
                    const auto &prev = ch.clusters[n - 1];
                    EXPECT_GE(c.excess_delay_ns - (prev.excess_delay_ns + prev.subpaths.back().intra_delay_ns),
                              25.0 - 1e-9);
                }
            }
            EXPECT_EQ(ch.clusters[0].excess_delay_ns, 0.0);
            EXPECT_LT(rel_err(cluster_sum, ch.rx_power_mw), 1e-9);
        }
    }
}

TEST(Channel, ThresholdRemovesOnlyWeakSubpaths)
{
    const auto cfg = make_generation_config(ScenarioKey::NLOS_73, 73e9);
    for (std::uint64_t i = 0; i < 500; ++i) {
        Rng a = Rng::substream(5, i);
        Rng b = Rng::substream(5, i);
        const OmniChannel raw = generate_channel_unthresholded(cfg, a);
        const OmniChannel cut = generate_channel(cfg, b);
        EXPECT_EQ(raw.subpath_count(), cut.subpath_count() + static_cast<std::size_t>(cut.n_thresholded));
        EXPECT_LE(cut.total_subpath_power_mw(), cut.rx_power_mw * (1 + 1e-9));
        for (const auto &c : cut.clusters)
            for (const auto &s : c.subpaths)
                EXPECT_LE(cut.tx_power_dbm - mw_to_dbm(s.power_mw), 180.0);
        for (const auto &c : raw.clusters)
            for (const auto &s : c.subpaths)
                if (raw.tx_power_dbm - mw_to_dbm(s.power_mw) <= 180.0)
                    EXPECT_TRUE(std::any_of(cut.clusters.begin(), cut.clusters.end(), [&](const TimeCluster &k) {
                        return std::find(k.subpaths.begin(), k.subpaths.end(), s) != k.subpaths.end();
                    }));
    }
}

TEST(Channel, OutageWhenEverythingIsBelowDynamicRange)
{
    auto cfg = make_generation_config(ScenarioKey::NLOS_28, 28e9);
    // The cut is on path loss, so transmit power cannot trigger it; distance can.
    cfg.distance = {1e6, 1e6};
    Rng rng(1);
    const OmniChannel ch = generate_channel(cfg, rng);
    EXPECT_TRUE(ch.outage);
    EXPECT_TRUE(ch.clusters.empty());
    EXPECT_GT(ch.n_thresholded, 0);
}

TEST(Channel, SameSeedSameRealization)
{
    const auto cfg = make_generation_config(ScenarioKey::LOS_28_73, 28e9);
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng a = Rng::substream(2024, i);
        Rng b = Rng::substream(2024, i);
        EXPECT_EQ(generate_channel(cfg, a), generate_channel(cfg, b));
    }
    Rng a = Rng::substream(2024, 0);
    Rng b = Rng::substream(2024, 1);
    EXPECT_NE(generate_channel(cfg, a), generate_channel(cfg, b));
}

TEST(Channel, ConfigValidationPropagates)
{
    auto cfg = make_generation_config(ScenarioKey::NLOS_28, 28e9);
    cfg.distance = {0.5, 10.0};
    Rng rng(1);
    EXPECT_THROW(generate_channel(cfg, rng), ConfigError);
    cfg = make_generation_config(ScenarioKey::NLOS_28, 28e9);
    cfg.params.mu_tau_ns = -1.0;
    EXPECT_THROW(generate_channel(cfg, rng), ConfigError);
}

TEST(Config, LosUsesFreeSpaceExponent)
{
    EXPECT_EQ(make_generation_config(ScenarioKey::LOS_28_73, 28e9).pathloss.ple, 2.0);
    EXPECT_EQ(make_generation_config(ScenarioKey::LOS_28_73, 28e9).pathloss.shadow_sigma_db, 3.6);
    EXPECT_EQ(make_generation_config(ScenarioKey::NLOS_73, 73e9).pathloss.ple, 3.3);
    EXPECT_EQ(make_generation_config(ScenarioKey::NLOS_28, 28e9).distance.d_max_m, 200.0);
}
