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

#include "sscm/ensemble.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sscm/error.hpp"
#include "sscm/io.hpp"
#include "sscm/pathloss.hpp"

namespace sscm {

using nlohmann::json;

namespace {

constexpr int kReportSchemaVersion = 1;
constexpr std::size_t kFlattenedLobes = 5;

std::string pointing_mode_name(PointingMode m)
{
    return m == PointingMode::Best ? "best" : "explicit";
}

Pointing pointing_from_json(const json &j)
{
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("pointing must be an [az_deg, el_deg] pair");
    Pointing p{j[0].get<double>(), j[1].get<double>()};
    p.validate();
    return p;
}

template <typename T>
void read_if(const json &j, const char *key, T &out)
{
    const auto it = j.find(key);
    if (it != j.end())
        out = it->template get<T>();
}

std::string hpbw_label(double hpbw)
{
    std::ostringstream ss;
    ss << hpbw;
    std::string s = ss.str();
    for (auto &c : s)
        if (c == '.')
            c = 'p';
    return s;
}

} // namespace

void RunConfig::validate() const
{
    if (n_realizations < 1)
        throw ConfigError("n_realizations must be >= 1");
    if (directional_count < 0)
        throw ConfigError("directional count must be >= 0");
    for (double h : directional_hpbws_deg)
        if (!(h > 0.0))
            throw ConfigError("directional beamwidths must be positive");
    if (!(lobe.bin_width_deg > 0.0 && lobe.bin_width_deg <= 360.0))
        throw ConfigError("lobe bin width must lie in (0, 360]");
    if (!(lobe.threshold_db <= 0.0))
        throw ConfigError("lobe threshold must be <= 0 dB");
    if (!(lobe.scan_hpbw_deg >= 0.0))
        throw ConfigError("lobe scan beamwidth must be >= 0");
    AntennaPattern::horn(antenna.tx_az_hpbw_deg, antenna.tx_el_hpbw_deg, antenna.efficiency);
    AntennaPattern::horn(antenna.rx_az_hpbw_deg, antenna.rx_el_hpbw_deg, antenna.efficiency);
    if (antenna.pointing == PointingMode::Explicit) {
        antenna.tx_pointing.validate();
        antenna.rx_pointing.validate();
    }
    generation_config().validate();
}

GenerationConfig RunConfig::generation_config() const
{
    GenerationConfig gen = make_generation_config(scenario_key, carrier_frequency_hz);
    gen.params = apply_overrides(gen.params, param_overrides);
    gen.tx_power_dbm = tx_power_dbm;
    if (distance)
        gen.distance = *distance;
    if (ple)
        gen.pathloss.ple = *ple;
    return gen;
}

RunConfig run_config_from_json(const json &j, RunConfig c)
{
    if (!j.is_object())
        throw ConfigError("run configuration must be a JSON object");
    try {
        if (j.contains("scenario"))
            c.scenario_key = parse_scenario_key(j.at("scenario").get<std::string>());
        read_if(j, "carrier_frequency_hz", c.carrier_frequency_hz);
        read_if(j, "tx_power_dbm", c.tx_power_dbm);
        read_if(j, "n_realizations", c.n_realizations);
        read_if(j, "seed", c.master_seed);
        if (j.contains("d_min_m") || j.contains("d_max_m")) {
            DistanceRange r = c.distance.value_or(default_distance_range(environment_of(c.scenario_key)));
            read_if(j, "d_min_m", r.d_min_m);
            read_if(j, "d_max_m", r.d_max_m);
            c.distance = r;
        }
        if (j.contains("ple"))
            c.ple = j.at("ple").get<double>();
        if (j.contains("params")) {
            if (!j.at("params").is_object())
                throw ConfigError("'params' must be an object");
            for (const auto &[k, v] : j.at("params").items())
                c.param_overrides[k] = v;
        }
        if (j.contains("antenna")) {
            const json &a = j.at("antenna");
            read_if(a, "tx_az_hpbw_deg", c.antenna.tx_az_hpbw_deg);
            read_if(a, "tx_el_hpbw_deg", c.antenna.tx_el_hpbw_deg);
            read_if(a, "rx_az_hpbw_deg", c.antenna.rx_az_hpbw_deg);
            read_if(a, "rx_el_hpbw_deg", c.antenna.rx_el_hpbw_deg);
            read_if(a, "efficiency", c.antenna.efficiency);
            if (a.contains("pointing")) {
                const auto mode = a.at("pointing").get<std::string>();
                if (mode == "best")
                    c.antenna.pointing = PointingMode::Best;
                else if (mode == "explicit")
                    c.antenna.pointing = PointingMode::Explicit;
                else
                    throw ConfigError("pointing must be 'best' or 'explicit'");
            }
            if (a.contains("tx_pointing"))
                c.antenna.tx_pointing = pointing_from_json(a.at("tx_pointing"));
            if (a.contains("rx_pointing"))
                c.antenna.rx_pointing = pointing_from_json(a.at("rx_pointing"));
        }
        if (j.contains("lobe")) {
            const json &l = j.at("lobe");
            read_if(l, "threshold_db", c.lobe.threshold_db);
            read_if(l, "bin_width_deg", c.lobe.bin_width_deg);
            read_if(l, "scan_hpbw_deg", c.lobe.scan_hpbw_deg);
        }
        if (j.contains("directional")) {
            const json &d = j.at("directional");
            read_if(d, "count", c.directional_count);
            read_if(d, "hpbws_deg", c.directional_hpbws_deg);
        }
        if (j.contains("output_dir"))
            c.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("emit")) {
            const json &e = j.at("emit");
            read_if(e, "pdp", c.emit.pdp);
            read_if(e, "spectrum", c.emit.spectrum);
            read_if(e, "stats", c.emit.stats);
            read_if(e, "cdf", c.emit.cdf);
        }
        read_if(j, "threads", c.threads);
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed run configuration: ") + e.what());
    }
    return c;
}

json run_config_to_json(const RunConfig &c)
{
    const GenerationConfig gen = c.generation_config();
    json j = {{"scenario", to_string(c.scenario_key)},
              {"carrier_frequency_hz", c.carrier_frequency_hz},
              {"tx_power_dbm", c.tx_power_dbm},
              {"n_realizations", c.n_realizations},
              {"seed", c.master_seed},
              {"d_min_m", gen.distance.d_min_m},
              {"d_max_m", gen.distance.d_max_m},
              {"ple", gen.pathloss.ple},
              {"shadow_sigma_db", gen.pathloss.shadow_sigma_db},
              {"params", to_json(gen.params)},
              {"antenna",
               {{"tx_az_hpbw_deg", c.antenna.tx_az_hpbw_deg},
                {"tx_el_hpbw_deg", c.antenna.tx_el_hpbw_deg},
                {"rx_az_hpbw_deg", c.antenna.rx_az_hpbw_deg},
                {"rx_el_hpbw_deg", c.antenna.rx_el_hpbw_deg},
                {"efficiency", c.antenna.efficiency},
                {"pointing", pointing_mode_name(c.antenna.pointing)},
                {"tx_pointing", {c.antenna.tx_pointing.az_deg, c.antenna.tx_pointing.el_deg}},
                {"rx_pointing", {c.antenna.rx_pointing.az_deg, c.antenna.rx_pointing.el_deg}}}},
              {"lobe",
               {{"threshold_db", c.lobe.threshold_db},
                {"bin_width_deg", c.lobe.bin_width_deg},
                {"scan_hpbw_deg", c.lobe.scan_hpbw_deg}}},
              {"directional", {{"count", c.directional_count}, {"hpbws_deg", c.directional_hpbws_deg}}}};
    return j;
}

OmniChannel realization(const GenerationConfig &gen, std::uint64_t master_seed, std::uint64_t index)
{
    Rng rng = Rng::substream(master_seed, index);
    return generate_channel(gen, rng);
}

RealizationStats realization_stats(const OmniChannel &ch, std::uint64_t index, const LobeOptions &lobe)
{
    RealizationStats st;
    st.index = index;
    st.outage = ch.outage;
    st.distance_m = ch.distance_m;
    st.pr_dbm = mw_to_dbm(ch.rx_power_mw);
    st.n_clusters = static_cast<int>(ch.clusters.size());
    st.n_subpaths_total = static_cast<int>(ch.subpath_count());
    if (ch.outage)
        return st;
    st.rms_ds_ns = rms_delay_spread(ch);
    const AngularSpectrum aod = angular_spectrum(ch, LobeKind::AOD);
    const AngularSpectrum aoa = angular_spectrum(ch, LobeKind::AOA);
    st.global_as_aod_az = global_angular_spread(aod, AngleAxis::Azimuth);
    st.global_as_aoa_az = global_angular_spread(aoa, AngleAxis::Azimuth);
    st.global_as_aod_el = global_angular_spread(aod, AngleAxis::Elevation);
    st.global_as_aoa_el = global_angular_spread(aoa, AngleAxis::Elevation);
    st.aod_lobes = lobe_statistics(aod, lobe);
    st.aoa_lobes = lobe_statistics(aoa, lobe);
    return st;
}

namespace {

// Runs fn(i) for i in [0, n) on `threads` workers; rethrows the first failure.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = n;
                }
            }
        });
    }
    for (auto &th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

void add_spread_metrics(std::map<std::string, double> &m, const std::string &name, const std::vector<double> &v,
                        bool use_median)
{
    if (v.empty())
        return;
    m[(use_median ? "median_" : "mean_") + name] = use_median ? median(v) : mean(v);
}

} // namespace

EnsembleReport run_ensemble(const RunConfig &config)
{
    config.validate();
    const GenerationConfig gen = config.generation_config();
    const auto n = static_cast<std::size_t>(config.n_realizations);

    EnsembleReport report;
    report.config = config;
    report.realizations.resize(n);
    std::vector<double> dir_ds(n, std::nan(""));

    const AntennaPattern tx = AntennaPattern::horn(config.antenna.tx_az_hpbw_deg, config.antenna.tx_el_hpbw_deg,
                                                   config.antenna.efficiency);
    const AntennaPattern rx = AntennaPattern::horn(config.antenna.rx_az_hpbw_deg, config.antenna.rx_el_hpbw_deg,
                                                   config.antenna.efficiency);

    parallel_for(n, config.threads, [&](std::size_t i) {
        const OmniChannel ch = realization(gen, config.master_seed, i);
        report.realizations[i] = realization_stats(ch, i, config.lobe);
        if (ch.outage)
            return;
        auto [tx_p, rx_p] = config.antenna.pointing == PointingMode::Best
                                ? best_pointing(ch)
                                : std::pair{config.antenna.tx_pointing, config.antenna.rx_pointing};
        const DirectionalPdp pdp = directional_cir(ch, tx, rx, tx_p, rx_p);
        if (pdp.total_power_mw() > 0.0)
            dir_ds[i] = rms_delay_spread(pdp);
    });

    std::vector<double> ds, dds, aod_az, aoa_az, aod_el, aoa_el, l_aod_az, l_aod_el, l_aoa_az, l_aoa_el;
    for (std::size_t i = 0; i < n; ++i) {
        const RealizationStats &r = report.realizations[i];
        if (r.outage) {
            ++report.outage_count;
            continue;
        }
        ds.push_back(r.rms_ds_ns);
        if (!std::isnan(dir_ds[i]))
            dds.push_back(dir_ds[i]);
        aod_az.push_back(r.global_as_aod_az);
        aoa_az.push_back(r.global_as_aoa_az);
        aod_el.push_back(r.global_as_aod_el);
        aoa_el.push_back(r.global_as_aoa_el);
        for (const auto &l : r.aod_lobes) {
            l_aod_az.push_back(l.rms_az_spread_deg);
            l_aod_el.push_back(l.rms_el_spread_deg);
        }
        for (const auto &l : r.aoa_lobes) {
            l_aoa_az.push_back(l.rms_az_spread_deg);
            l_aoa_el.push_back(l.rms_el_spread_deg);
        }
    }

    auto &m = report.metrics;
    m["n_realizations"] = static_cast<double>(n);
    m["outage_count"] = report.outage_count;
    m["outage_fraction"] = static_cast<double>(report.outage_count) / static_cast<double>(n);
    add_spread_metrics(m, "rms_ds_ns", ds, true);
    add_spread_metrics(m, "rms_ds_ns", ds, false);
    add_spread_metrics(m, "dir_rms_ds_ns", dds, true);
    add_spread_metrics(m, "global_as_aod_az_deg", aod_az, true);
    add_spread_metrics(m, "global_as_aoa_az_deg", aoa_az, true);
    add_spread_metrics(m, "global_as_aod_el_deg", aod_el, true);
    add_spread_metrics(m, "global_as_aoa_el_deg", aoa_el, true);
    add_spread_metrics(m, "global_as_aod_az_deg", aod_az, false);
    add_spread_metrics(m, "global_as_aoa_az_deg", aoa_az, false);
    add_spread_metrics(m, "lobe_aod_az_deg", l_aod_az, false);
    add_spread_metrics(m, "lobe_aod_el_deg", l_aod_el, false);
    add_spread_metrics(m, "lobe_aoa_az_deg", l_aoa_az, false);
    add_spread_metrics(m, "lobe_aoa_el_deg", l_aoa_el, false);
    m["n_lobes_aod"] = static_cast<double>(l_aod_az.size());
    m["n_lobes_aoa"] = static_cast<double>(l_aoa_az.size());

    // Beam-aligned directional delay spreads for a few realizations per beamwidth.
    for (double hpbw : config.directional_hpbws_deg) {
        const AntennaPattern horn = AntennaPattern::horn(hpbw, hpbw, config.antenna.efficiency);
        std::vector<double> v;
        for (std::size_t i = 0; i < n && static_cast<int>(v.size()) < config.directional_count; ++i) {
            if (report.realizations[i].outage)
                continue;
            const OmniChannel ch = realization(gen, config.master_seed, i);
            const auto [tx_p, rx_p] = best_pointing(ch);
            v.push_back(rms_delay_spread(directional_cir(ch, horn, horn, tx_p, rx_p)));
        }
        add_spread_metrics(m, "dir_rms_ds_ns_hpbw_" + hpbw_label(hpbw), v, true);
    }
    return report;
}

json EnsembleReport::summary_json() const
{
    json metrics_json = json::object();
    for (const auto &[k, v] : metrics)
        metrics_json[k] = v;
    return {{"schema_version", kReportSchemaVersion},
            {"config", run_config_to_json(config)},
            {"metrics", std::move(metrics_json)}};
}

std::string stats_csv(const EnsembleReport &report)
{
    std::ostringstream out;
    out << "seed_index,outage,distance_m,pr_dbm,n_clusters,n_subpaths_total,rms_ds_ns,"
           "global_as_aod_az,global_as_aoa_az,global_as_aod_el,global_as_aoa_el,n_lobes_aod,n_lobes_aoa";
    for (const char *side : {"aod", "aoa"})
        for (std::size_t k = 1; k <= kFlattenedLobes; ++k)
            out << ',' << side << "_lobe" << k << "_az_spread," << side << "_lobe" << k << "_el_spread";
    out << '\n';
    auto lobes = [&](const std::vector<LobeStats> &ls) {
        for (std::size_t k = 0; k < kFlattenedLobes; ++k) {
            if (k < ls.size())
                out << ',' << format_double(ls[k].rms_az_spread_deg) << ',' << format_double(ls[k].rms_el_spread_deg);
            else
                out << ",,";
        }
    };
    for (const auto &r : report.realizations) {
        out << r.index << ',' << (r.outage ? 1 : 0) << ',' << format_double(r.distance_m) << ','
            << format_double(r.pr_dbm) << ',' << r.n_clusters << ',' << r.n_subpaths_total;
        if (r.outage) {
            out << ",,,,,,,";
        } else {
            out << ',' << format_double(r.rms_ds_ns) << ',' << format_double(r.global_as_aod_az) << ','
                << format_double(r.global_as_aoa_az) << ',' << format_double(r.global_as_aod_el) << ','
                << format_double(r.global_as_aoa_el) << ',' << r.aod_lobes.size() << ',' << r.aoa_lobes.size();
        }
        lobes(r.aod_lobes);
        lobes(r.aoa_lobes);
        out << '\n';
    }
    return out.str();
}

void write_report(const EnsembleReport &report, const std::filesystem::path &dir)
{
    write_text_file(dir / "report.json", report.summary_json().dump(2) + "\n");
    const EmitFlags &emit = report.config.emit;
    if (emit.stats)
        write_text_file(dir / "stats.csv", stats_csv(report));
    if (emit.cdf) {
        auto emit_cdf = [&](const std::string &name, auto getter) {
            std::vector<double> v;
            for (const auto &r : report.realizations)
                if (!r.outage)
                    v.push_back(getter(r));
            if (v.empty())
                return;
            std::ostringstream out;
            write_cdf_csv(out, empirical_cdf(v));
            write_text_file(dir / ("cdf_" + name + ".csv"), out.str());
        };
        emit_cdf("rms_ds_ns", [](const RealizationStats &r) { return r.rms_ds_ns; });
        emit_cdf("global_as_aod_az", [](const RealizationStats &r) { return r.global_as_aod_az; });
        emit_cdf("global_as_aoa_az", [](const RealizationStats &r) { return r.global_as_aoa_az; });
        emit_cdf("global_as_aod_el", [](const RealizationStats &r) { return r.global_as_aod_el; });
        emit_cdf("global_as_aoa_el", [](const RealizationStats &r) { return r.global_as_aoa_el; });
    }
    if (emit.pdp || emit.spectrum) {
        const GenerationConfig gen = report.config.generation_config();
        for (const auto &r : report.realizations) {
            const OmniChannel ch = realization(gen, report.config.master_seed, r.index);
            const std::string tag = std::to_string(r.index);
            if (emit.pdp) {
                std::ostringstream out;
                write_pdp_csv(out, ch);
                write_text_file(dir / "pdp" / ("pdp_" + tag + ".csv"), out.str());
            }
            if (emit.spectrum && !ch.outage) {
                for (LobeKind kind : {LobeKind::AOD, LobeKind::AOA}) {
                    std::ostringstream out;
                    write_spectrum_csv(out, angular_spectrum(ch, kind));
                    write_text_file(dir / "spectrum" /
                                        ((kind == LobeKind::AOD ? "aod_" : "aoa_") + tag + ".csv"),
                                    out.str());
                }
            }
        }
    }
}

std::vector<Expectation> expectations_from_json(const json &j)
{
    try {
        const json &list = j.is_array() ? j : j.at("expectations");
        std::vector<Expectation> out;
        for (const auto &e : list) {
            Expectation x;
            x.metric = e.at("metric").get<std::string>();
            x.expected = e.at("expected").get<double>();
            if (e.contains("rel_tol"))
                x.rel_tol = e.at("rel_tol").get<double>();
            if (e.contains("abs_tol"))
                x.abs_tol = e.at("abs_tol").get<double>();
            if (!x.rel_tol && !x.abs_tol)
                throw ConfigError("expectation '" + x.metric + "' needs rel_tol or abs_tol");
            out.push_back(std::move(x));
        }
        return out;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed expectations: ") + e.what());
    }
}

ValidationSummary validate(const std::map<std::string, double> &metrics, const std::vector<Expectation> &expectations)
{
    ValidationSummary summary;
    if (expectations.empty()) {
        summary.warnings.emplace_back("no expectations given; nothing validated");
        return summary;
    }
    for (const auto &e : expectations) {
        ValidationLine line;
        line.metric = e.metric;
        line.expected = e.expected;
        const double tol = e.abs_tol ? *e.abs_tol : std::abs(e.expected) * *e.rel_tol;
        line.lower = e.expected - tol;
        line.upper = e.expected + tol;
        const auto it = metrics.find(e.metric);
        if (it != metrics.end()) {
            line.observed = it->second;
            line.pass = it->second >= line.lower && it->second <= line.upper;
        } else {
            summary.warnings.push_back("metric '" + e.metric + "' not present in report");
        }
        summary.pass = summary.pass && line.pass;
        summary.lines.push_back(line);
    }
    return summary;
}

} // namespace sscm
