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

#include "sscm/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "sscm/error.hpp"
#include "sscm/pathloss.hpp"

namespace sscm {

using nlohmann::json;

namespace {

json lobe_to_json(const SpatialLobe &l)
{
    return {{"kind", l.kind == LobeKind::AOD ? "AOD" : "AOA"},
            {"index", l.index},
            {"mean_az_deg", l.mean_az_deg},
            {"mean_el_deg", l.mean_el_deg}};
}

SpatialLobe lobe_from_json(const json &j)
{
    SpatialLobe l;
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "AOD" && kind != "AOA")
        throw ConfigError("lobe kind must be AOD or AOA");
    l.kind = kind == "AOD" ? LobeKind::AOD : LobeKind::AOA;
    l.index = j.at("index").get<int>();
    l.mean_az_deg = j.at("mean_az_deg").get<double>();
    l.mean_el_deg = j.at("mean_el_deg").get<double>();
    return l;
}

json subpath_to_json(const Subpath &s)
{
    return {{"cluster", s.cluster},          {"index", s.index},
            {"intra_delay_ns", s.intra_delay_ns}, {"abs_delay_ns", s.abs_delay_ns},
            {"power_mw", s.power_mw},        {"amplitude", s.amplitude},
            {"phase_rad", s.phase_rad},      {"aod_az_deg", s.aod_az_deg},
            {"aod_el_deg", s.aod_el_deg},    {"aoa_az_deg", s.aoa_az_deg},
            {"aoa_el_deg", s.aoa_el_deg},    {"aod_lobe", s.aod_lobe},
            {"aoa_lobe", s.aoa_lobe}};
}

Subpath subpath_from_json(const json &j)
{
    Subpath s;
    s.cluster = j.at("cluster").get<int>();
    s.index = j.at("index").get<int>();
    s.intra_delay_ns = j.at("intra_delay_ns").get<double>();
    s.abs_delay_ns = j.at("abs_delay_ns").get<double>();
    s.power_mw = j.at("power_mw").get<double>();
    s.amplitude = j.at("amplitude").get<double>();
    s.phase_rad = j.at("phase_rad").get<double>();
    s.aod_az_deg = j.at("aod_az_deg").get<double>();
    s.aod_el_deg = j.at("aod_el_deg").get<double>();
    s.aoa_az_deg = j.at("aoa_az_deg").get<double>();
    s.aoa_el_deg = j.at("aoa_el_deg").get<double>();
    s.aod_lobe = j.at("aod_lobe").get<int>();
    s.aoa_lobe = j.at("aoa_lobe").get<int>();
    return s;
}

double safe_dbm(double mw)
{
    return mw > 0.0 ? mw_to_dbm(mw) : -std::numeric_limits<double>::infinity();
}

} // namespace

json channel_to_json(const OmniChannel &ch)
{
    json clusters = json::array();
    for (const auto &c : ch.clusters) {
        json subpaths = json::array();
        for (const auto &s : c.subpaths)
            subpaths.push_back(subpath_to_json(s));
        clusters.push_back({{"index", c.index},
                            {"excess_delay_ns", c.excess_delay_ns},
                            {"power_mw", c.power_mw},
                            {"subpaths", std::move(subpaths)}});
    }
    json aod = json::array();
    for (const auto &l : ch.aod_lobes)
        aod.push_back(lobe_to_json(l));
    json aoa = json::array();
    for (const auto &l : ch.aoa_lobes)
        aoa.push_back(lobe_to_json(l));

    return {{"schema_version", kChannelSchemaVersion},
            {"distance_m", ch.distance_m},
            {"t0_ns", ch.t0_ns},
            {"tx_power_dbm", ch.tx_power_dbm},
            {"path_loss_db", ch.path_loss_db},
            {"shadow_db", ch.shadow_db},
            {"rx_power_mw", ch.rx_power_mw},
            {"n_thresholded", ch.n_thresholded},
            {"outage", ch.outage},
            {"clusters", std::move(clusters)},
            {"aod_lobes", std::move(aod)},
            {"aoa_lobes", std::move(aoa)}};
}

OmniChannel channel_from_json(const json &j)
{
    try {
        if (j.at("schema_version").get<int>() != kChannelSchemaVersion)
            throw ConfigError("unsupported channel schema version");
        OmniChannel ch;
        ch.distance_m = j.at("distance_m").get<double>();
        ch.t0_ns = j.at("t0_ns").get<double>();
        ch.tx_power_dbm = j.at("tx_power_dbm").get<double>();
        ch.path_loss_db = j.at("path_loss_db").get<double>();
        ch.shadow_db = j.at("shadow_db").get<double>();
        ch.rx_power_mw = j.at("rx_power_mw").get<double>();
        ch.n_thresholded = j.at("n_thresholded").get<int>();
        ch.outage = j.at("outage").get<bool>();
        for (const auto &cj : j.at("clusters")) {
            TimeCluster c;
            c.index = cj.at("index").get<int>();
            c.excess_delay_ns = cj.at("excess_delay_ns").get<double>();
            c.power_mw = cj.at("power_mw").get<double>();
            for (const auto &sj : cj.at("subpaths"))
                c.subpaths.push_back(subpath_from_json(sj));
            ch.clusters.push_back(std::move(c));
        }
        for (const auto &lj : j.at("aod_lobes"))
            ch.aod_lobes.push_back(lobe_from_json(lj));
        for (const auto &lj : j.at("aoa_lobes"))
            ch.aoa_lobes.push_back(lobe_from_json(lj));
        return ch;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed channel JSON: ") + e.what());
    }
}

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void write_pdp_csv(std::ostream &out, const OmniChannel &channel)
{
    auto subpaths = channel.subpaths();
    std::stable_sort(subpaths.begin(), subpaths.end(),
                     [](const Subpath &a, const Subpath &b) { return a.abs_delay_ns < b.abs_delay_ns; });
    out << "delay_ns,power_dbm\n";
    for (const auto &s : subpaths)
        out << format_double(s.abs_delay_ns) << ',' << format_double(safe_dbm(s.power_mw)) << '\n';
}

void write_pdp_csv(std::ostream &out, const DirectionalPdp &pdp)
{
    out << "delay_ns,power_dbm\n";
    for (const auto &t : pdp.taps)
        out << format_double(t.abs_delay_ns) << ',' << format_double(safe_dbm(t.power_mw)) << '\n';
}

void write_spectrum_csv(std::ostream &out, const AngularSpectrum &spectrum)
{
    out << "az_deg,el_deg,power_dbm\n";
    for (const auto &s : spectrum.samples)
        out << format_double(s.az_deg) << ',' << format_double(s.el_deg) << ',' << format_double(safe_dbm(s.power_mw))
            << '\n';
}

void write_cdf_csv(std::ostream &out, std::span<const CdfPoint> cdf)
{
    out << "value,probability\n";
    for (const auto &p : cdf)
        out << format_double(p.value) << ',' << format_double(p.probability) << '\n';
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
    std::error_code ec;
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
        throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace sscm
