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

#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sscm/ensemble.hpp"
#include "sscm/error.hpp"
#include "sscm/io.hpp"

namespace sscm::cli {

namespace {

struct AntennaFlags {
    std::optional<double> tx_az, tx_el, rx_az, rx_el, efficiency;
    std::string pointing = "best";
    std::vector<double> tx_pointing, rx_pointing;
};

struct CommonFlags {
    std::string scenario = "nlos-28-73";
    std::optional<double> freq;
    std::string config_path;
    std::uint64_t seed = 42;
    std::optional<double> tx_power, d_min, d_max, ple;
    AntennaFlags antenna;
};

void add_common(CLI::App *cmd, CommonFlags &f)
{
    cmd->add_option("--scenario", f.scenario, "los-28-73 | nlos-28 | nlos-73 | nlos-28-73")->capture_default_str();
    cmd->add_option("--freq", f.freq, "Carrier frequency in Hz (default: 73e9 for nlos-73, else 28e9)");
    cmd->add_option("--seed", f.seed, "Master seed")->capture_default_str();
    cmd->add_option("--config", f.config_path, "JSON run configuration; its fields override flags");
    cmd->add_option("--tx-power", f.tx_power, "Transmit power in dBm (default 30)");
    cmd->add_option("--d-min", f.d_min, "Minimum TX-RX distance in m");
    cmd->add_option("--d-max", f.d_max, "Maximum TX-RX distance in m");
    cmd->add_option("--ple", f.ple, "Path loss exponent override");
    cmd->add_option("--tx-hpbw-az", f.antenna.tx_az, "TX azimuth HPBW in degrees");
    cmd->add_option("--tx-hpbw-el", f.antenna.tx_el, "TX elevation HPBW in degrees");
    cmd->add_option("--rx-hpbw-az", f.antenna.rx_az, "RX azimuth HPBW in degrees");
    cmd->add_option("--rx-hpbw-el", f.antenna.rx_el, "RX elevation HPBW in degrees");
    cmd->add_option("--efficiency", f.antenna.efficiency, "Antenna efficiency in (0, 1]");
    cmd->add_option("--pointing", f.antenna.pointing, "best | explicit")
        ->check(CLI::IsMember({"best", "explicit"}))
        ->capture_default_str();
    cmd->add_option("--tx-pointing", f.antenna.tx_pointing, "Explicit TX pointing az,el in degrees")
        ->delimiter(',')
        ->expected(2);
    cmd->add_option("--rx-pointing", f.antenna.rx_pointing, "Explicit RX pointing az,el in degrees")
        ->delimiter(',')
        ->expected(2);
}

RunConfig build_config(const CommonFlags &f)
{
    RunConfig c;
    c.scenario_key = parse_scenario_key(f.scenario);
    c.carrier_frequency_hz = f.freq.value_or(c.scenario_key == ScenarioKey::NLOS_73 ? 73e9 : 28e9);
    c.master_seed = f.seed;
    if (f.tx_power)
        c.tx_power_dbm = *f.tx_power;
    if (f.d_min || f.d_max) {
        DistanceRange r = default_distance_range(environment_of(c.scenario_key));
        r.d_min_m = f.d_min.value_or(r.d_min_m);
        r.d_max_m = f.d_max.value_or(r.d_max_m);
        c.distance = r;
    }
    if (f.ple)
        c.ple = *f.ple;
    const AntennaFlags &a = f.antenna;
    c.antenna.tx_az_hpbw_deg = a.tx_az.value_or(c.antenna.tx_az_hpbw_deg);
    c.antenna.tx_el_hpbw_deg = a.tx_el.value_or(c.antenna.tx_el_hpbw_deg);
    c.antenna.rx_az_hpbw_deg = a.rx_az.value_or(c.antenna.rx_az_hpbw_deg);
    c.antenna.rx_el_hpbw_deg = a.rx_el.value_or(c.antenna.rx_el_hpbw_deg);
    c.antenna.efficiency = a.efficiency.value_or(c.antenna.efficiency);
    c.antenna.pointing = a.pointing == "explicit" ? PointingMode::Explicit : PointingMode::Best;
    if (a.tx_pointing.size() == 2)
        c.antenna.tx_pointing = {a.tx_pointing[0], a.tx_pointing[1]};
    if (a.rx_pointing.size() == 2)
        c.antenna.rx_pointing = {a.rx_pointing[0], a.rx_pointing[1]};
    if (c.antenna.pointing == PointingMode::Explicit && (a.tx_pointing.size() != 2 || a.rx_pointing.size() != 2))
        throw ConfigError("--pointing explicit requires --tx-pointing and --rx-pointing");
    if (!f.config_path.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_text_file(f.config_path));
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError("cannot parse " + f.config_path + ": " + e.what());
        }
        c = run_config_from_json(j, c);
    }
    return c;
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_run(CommonFlags &f, int n, const std::string &out_dir, unsigned threads, const std::string &emit,
            std::optional<double> lobe_scan, std::ostream &out)
{
    RunConfig c = build_config(f);
    // Flags given explicitly for run-only options still yield to the config file.
    RunConfig flags = c;
    flags.n_realizations = n;
    flags.threads = threads;
    if (!out_dir.empty())
        flags.output_dir = out_dir;
    if (lobe_scan)
        flags.lobe.scan_hpbw_deg = *lobe_scan;
    if (!emit.empty()) {
        flags.emit = EmitFlags{false, false, false, false};
        for (const auto &e : split_list(emit)) {
            if (e == "pdp")
                flags.emit.pdp = true;
            else if (e == "spectrum")
                flags.emit.spectrum = true;
            else if (e == "stats")
                flags.emit.stats = true;
            else if (e == "cdf")
                flags.emit.cdf = true;
            else
                throw ConfigError("unknown --emit item '" + e + "'");
        }
    }
    if (!f.config_path.empty())
        flags = run_config_from_json(nlohmann::json::parse(read_text_file(f.config_path)), flags);
    const EnsembleReport report = run_ensemble(flags);
    if (!flags.output_dir.empty())
        write_report(report, flags.output_dir);
    out << report.summary_json().dump(2) << '\n';
    return kOk;
}

int cmd_pdp(CommonFlags &f, std::uint64_t index, const std::string &out_dir, std::ostream &out)
{
    const RunConfig c = build_config(f);
    c.validate();
    const OmniChannel ch = realization(c.generation_config(), c.master_seed, index);
    const nlohmann::json j = channel_to_json(ch);
    if (out_dir.empty()) {
        out << j.dump(2) << '\n';
        return kOk;
    }
    const std::filesystem::path dir = out_dir;
    write_text_file(dir / "channel.json", j.dump(2) + "\n");
    std::ostringstream pdp;
    write_pdp_csv(pdp, ch);
    write_text_file(dir / "pdp.csv", pdp.str());
    if (!ch.outage) {
        for (LobeKind kind : {LobeKind::AOD, LobeKind::AOA}) {
            std::ostringstream s;
            write_spectrum_csv(s, angular_spectrum(ch, kind));
            write_text_file(dir / (kind == LobeKind::AOD ? "spectrum_aod.csv" : "spectrum_aoa.csv"), s.str());
        }
        const AntennaPattern tx =
            AntennaPattern::horn(c.antenna.tx_az_hpbw_deg, c.antenna.tx_el_hpbw_deg, c.antenna.efficiency);
        const AntennaPattern rx =
            AntennaPattern::horn(c.antenna.rx_az_hpbw_deg, c.antenna.rx_el_hpbw_deg, c.antenna.efficiency);
        const auto [tx_p, rx_p] = c.antenna.pointing == PointingMode::Best
                                      ? best_pointing(ch)
                                      : std::pair{c.antenna.tx_pointing, c.antenna.rx_pointing};
        std::ostringstream d;
        write_pdp_csv(d, directional_cir(ch, tx, rx, tx_p, rx_p));
        write_text_file(dir / "pdp_directional.csv", d.str());
    }
    out << "wrote realization " << index << " to " << dir.string() << (ch.outage ? " (outage)" : "") << '\n';
    return kOk;
}

int cmd_validate(const std::string &report_path, const std::string &expect_path, std::ostream &out,
                 std::ostream &err)
{
    nlohmann::json report, expect;
    try {
        report = nlohmann::json::parse(read_text_file(report_path));
        expect = nlohmann::json::parse(read_text_file(expect_path));
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("cannot parse input: ") + e.what());
    }
    std::map<std::string, double> metrics;
    try {
        for (const auto &[k, v] : report.at("metrics").items())
            if (v.is_number())
                metrics[k] = v.get<double>();
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("report has no metrics: ") + e.what());
    }
    const ValidationSummary s = validate(metrics, expectations_from_json(expect));
    for (const auto &w : s.warnings)
        err << "warning: " << w << '\n';
    for (const auto &l : s.lines) {
        out << (l.pass ? "PASS " : "FAIL ") << l.metric << " observed=";
        if (l.observed)
            out << *l.observed;
        else
            out << "missing";
        out << " expected=" << l.expected << " range=[" << l.lower << ", " << l.upper << "]\n";
    }
    return s.pass ? kOk : kValidationFailed;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Statistical spatial channel simulator for mmWave links"};
    app.require_subcommand(1);

    CommonFlags run_flags;
    int n = 10000;
    std::string run_out, emit;
    unsigned threads = 0;
    std::optional<double> lobe_scan;
    CLI::App *run_cmd = app.add_subcommand("run", "Generate an ensemble and report its statistics");
    add_common(run_cmd, run_flags);
    run_cmd->add_option("--n", n, "Number of realizations")->capture_default_str();
    run_cmd->add_option("--out", run_out, "Output directory");
    run_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    run_cmd->add_option("--emit", emit, "Comma list of pdp,spectrum,stats,cdf (default stats,cdf)");
    run_cmd->add_option("--lobe-scan-hpbw", lobe_scan, "Azimuth sweep beamwidth for lobe detection (deg)");

    CommonFlags pdp_flags;
    std::uint64_t index = 0;
    std::string pdp_out;
    CLI::App *pdp_cmd = app.add_subcommand("pdp", "Emit a single realization");
    add_common(pdp_cmd, pdp_flags);
    pdp_cmd->add_option("--index", index, "Realization index")->capture_default_str();
    pdp_cmd->add_option("--out", pdp_out, "Output directory (default: channel JSON on stdout)");

    std::string report_path = "report.json", expect_path;
    CLI::App *val_cmd = app.add_subcommand("validate", "Check report metrics against expectations");
    val_cmd->add_option("--report", report_path, "report.json from 'run'")->capture_default_str();
    val_cmd->add_option("--expect", expect_path, "Expectations JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        if (run_cmd->parsed())
            return cmd_run(run_flags, n, run_out, threads, emit, lobe_scan, out);
        if (pdp_cmd->parsed())
            return cmd_pdp(pdp_flags, index, pdp_out, out);
        return cmd_validate(report_path, expect_path, out, err);
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const nlohmann::json::exception &e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::exception &e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfigError;
    }
}

} // namespace sscm::cli
