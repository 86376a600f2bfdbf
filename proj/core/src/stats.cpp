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

#include "sscm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "sscm/error.hpp"

namespace sscm {

namespace {

template <typename Range, typename PowerFn>
double total_power(const Range &range, PowerFn power)
{
    double total = 0.0;
    for (const auto &x : range)
        total += power(x);
    return total;
}

} // namespace

double rms_delay_spread(std::span<const DelayPower> taps)
{
    const double p = total_power(taps, [](const DelayPower &t) { return t.power_mw; });
    if (taps.empty() || !(p > 0.0))
        throw UndefinedStatistic("RMS delay spread needs at least one tap with positive power");
    // Centered on the first tap so that large absolute delays do not cost precision.
    const double origin = taps.front().delay_ns;
    double m1 = 0.0;
    for (const auto &t : taps)
        m1 += t.power_mw * (t.delay_ns - origin);
    m1 /= p;
    double m2 = 0.0;
    for (const auto &t : taps) {
        const double d = t.delay_ns - origin - m1;
        m2 += t.power_mw * d * d;
    }
    return std::sqrt(m2 / p);
}

double rms_delay_spread(const OmniChannel &channel)
{
    std::vector<DelayPower> taps;
    taps.reserve(channel.subpath_count());
    for (const auto &c : channel.clusters)
        for (const auto &s : c.subpaths)
            taps.push_back({s.abs_delay_ns, s.power_mw});
    return rms_delay_spread(taps);
}

double rms_delay_spread(const DirectionalPdp &pdp)
{
    std::vector<DelayPower> taps;
    taps.reserve(pdp.taps.size());
    for (const auto &t : pdp.taps)
        taps.push_back({t.abs_delay_ns, t.power_mw});
    return rms_delay_spread(taps);
}

double AngularSpectrum::total_power_mw() const
{
    return total_power(samples, [](const AngularSample &s) { return s.power_mw; });
}

AngularSpectrum angular_spectrum(const OmniChannel &channel, LobeKind kind)
{
    if (channel.outage || channel.subpath_count() == 0)
        throw UndefinedStatistic("angular spectrum of an outage channel");
    AngularSpectrum spec;
    spec.kind = kind;
    spec.samples.reserve(channel.subpath_count());
    for (const auto &c : channel.clusters) {
        for (const auto &s : c.subpaths) {
            const double p = s.amplitude * s.amplitude;
            if (kind == LobeKind::AOD)
                spec.samples.push_back({s.aod_az_deg, s.aod_el_deg, p});
            else
                spec.samples.push_back({s.aoa_az_deg, s.aoa_el_deg, p});
        }
    }
    return spec;
}

std::size_t AzimuthBins::bin_of(double az_deg) const
{
    const auto n = power_mw.size();
    const auto b = static_cast<std::size_t>(std::floor(wrap_azimuth_deg(az_deg) / bin_width_deg));
    return std::min(b, n - 1);
}

double AzimuthBins::center_deg(std::size_t bin) const
{
    return (static_cast<double>(bin) + 0.5) * bin_width_deg;
}

namespace {

std::size_t bin_count(double bin_width_deg)
{
    if (!(bin_width_deg > 0.0 && bin_width_deg <= 360.0))
        throw ConfigError("azimuth bin width must lie in (0, 360]");
    return static_cast<std::size_t>(std::llround(360.0 / bin_width_deg));
}

} // namespace

AzimuthBins bin_azimuth(const AngularSpectrum &spectrum, double bin_width_deg, double scan_hpbw_deg)
{
    AzimuthBins bins;
    bins.bin_width_deg = bin_width_deg;
    bins.power_mw.assign(bin_count(bin_width_deg), 0.0);
    if (scan_hpbw_deg <= 0.0) {
        for (const auto &s : spectrum.samples)
            bins.power_mw[bins.bin_of(s.az_deg)] += s.power_mw;
        return bins;
    }
    const double alpha = 4.0 * std::numbers::ln2 / (scan_hpbw_deg * scan_hpbw_deg);
    for (std::size_t b = 0; b < bins.power_mw.size(); ++b) {
        const double center = bins.center_deg(b);
        double acc = 0.0;
        for (const auto &s : spectrum.samples) {
            const double off = wrap_offset_deg(center - s.az_deg);
            acc += s.power_mw * std::exp(-alpha * off * off);
        }
        bins.power_mw[b] = acc;
    }
    return bins;
}

double global_angular_spread(const AngularSpectrum &spectrum, AngleAxis axis, double shift_step_deg)
{
    const double p = spectrum.total_power_mw();
    if (spectrum.samples.empty() || !(p > 0.0))
        throw UndefinedStatistic("angular spread of a zero-power spectrum");

    if (axis == AngleAxis::Elevation) {
        double m1 = 0.0;
        for (const auto &s : spectrum.samples)
            m1 += s.power_mw * s.el_deg;
        m1 /= p;
        double m2 = 0.0;
        for (const auto &s : spectrum.samples)
            m2 += s.power_mw * (s.el_deg - m1) * (s.el_deg - m1);
        return std::sqrt(m2 / p);
    }

    if (!(shift_step_deg > 0.0))
        throw ConfigError("shift step must be positive");
    const auto n_shifts = static_cast<long>(std::ceil(360.0 / shift_step_deg - 1e-9));
    double best = std::numeric_limits<double>::infinity();
    for (long k = 0; k < n_shifts; ++k) {
        const double shift = -180.0 + static_cast<double>(k) * shift_step_deg;
        double m1 = 0.0;
        for (const auto &s : spectrum.samples)
            m1 += s.power_mw * wrap_offset_deg(s.az_deg + shift);
        m1 /= p;
        double m2 = 0.0;
        for (const auto &s : spectrum.samples) {
            const double d = wrap_offset_deg(wrap_offset_deg(s.az_deg + shift) - m1);
            m2 += s.power_mw * d * d;
        }
        best = std::min(best, std::sqrt(m2 / p));
    }
    return best;
}

bool LobeSegment::contains(double az_deg) const
{
    const auto n_total = static_cast<std::size_t>(std::llround(360.0 / bin_width_deg));
    const auto bin = std::min(static_cast<std::size_t>(std::floor(wrap_azimuth_deg(az_deg) / bin_width_deg)),
                              n_total - 1);
    const std::size_t rel = (bin + n_total - first_bin) % n_total;
    return rel < n_bins;
}

double LobeSegment::center_deg() const
{
    return wrap_azimuth_deg((static_cast<double>(first_bin) + 0.5 * static_cast<double>(n_bins)) * bin_width_deg);
}

std::vector<LobeSegment> segment_lobes(const AngularSpectrum &spectrum, const LobeOptions &options)
{
    std::vector<LobeSegment> segments;
    if (!(spectrum.total_power_mw() > 0.0))
        return segments;

    const AzimuthBins bins = bin_azimuth(spectrum, options.bin_width_deg, options.scan_hpbw_deg);
    const std::size_t n = bins.power_mw.size();
    const double peak = *std::max_element(bins.power_mw.begin(), bins.power_mw.end());
    const double floor = peak * std::pow(10.0, options.threshold_db / 10.0);
    std::vector<bool> above(n);
    for (std::size_t b = 0; b < n; ++b)
        above[b] = bins.power_mw[b] > 0.0 && bins.power_mw[b] >= floor;

    const auto start = std::find(above.begin(), above.end(), false);
    if (start == above.end()) {
        segments.push_back({0, n, options.bin_width_deg, 0.0});
    } else {
        // Walk once around the circle starting from a sub-threshold bin.
        const auto origin = static_cast<std::size_t>(start - above.begin());
        std::size_t k = 0;
        while (k < n) {
            const std::size_t b = (origin + k) % n;
            if (!above[b]) {
                ++k;
                continue;
            }
            LobeSegment seg{b, 0, options.bin_width_deg, 0.0};
            while (k < n && above[(origin + k) % n]) {
                ++seg.n_bins;
                ++k;
            }
            segments.push_back(seg);
        }
    }

    for (auto &seg : segments)
        for (const auto &s : spectrum.samples)
            if (seg.contains(s.az_deg))
                seg.power_mw += s.power_mw;
    std::erase_if(segments, [](const LobeSegment &s) { return !(s.power_mw > 0.0); });
    std::stable_sort(segments.begin(), segments.end(),
                     [](const LobeSegment &a, const LobeSegment &b) { return a.power_mw > b.power_mw; });
    return segments;
}

LobeStats rms_lobe_spread(const AngularSpectrum &spectrum, const LobeSegment &segment, int lobe_id)
{
    const double center = segment.center_deg();
    double p = 0.0, az1 = 0.0, el1 = 0.0;
    for (const auto &s : spectrum.samples) {
        if (!segment.contains(s.az_deg))
            continue;
        p += s.power_mw;
        az1 += s.power_mw * wrap_offset_deg(s.az_deg - center);
        el1 += s.power_mw * s.el_deg;
    }
    LobeStats st;
    st.lobe_id = lobe_id;
    if (!(p > 0.0))
        return st;
    az1 /= p;
    el1 /= p;
    double az2 = 0.0, el2 = 0.0;
    for (const auto &s : spectrum.samples) {
        if (!segment.contains(s.az_deg))
            continue;
        const double da = wrap_offset_deg(s.az_deg - center) - az1;
        const double de = s.el_deg - el1;
        az2 += s.power_mw * da * da;
        el2 += s.power_mw * de * de;
    }
    st.power_fraction = p / spectrum.total_power_mw();
    st.rms_az_spread_deg = std::sqrt(az2 / p);
    st.rms_el_spread_deg = std::sqrt(el2 / p);
    st.mean_az_deg = wrap_azimuth_deg(center + az1);
    st.mean_el_deg = el1;
    return st;
}

std::vector<LobeStats> lobe_statistics(const AngularSpectrum &spectrum, const LobeOptions &options)
{
    std::vector<LobeStats> out;
    int id = 1;
    for (const auto &seg : segment_lobes(spectrum, options))
        out.push_back(rms_lobe_spread(spectrum, seg, id++));
    return out;
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples)
{
    if (samples.empty())
        throw UndefinedStatistic("empirical CDF of an empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<CdfPoint> cdf;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i])
            continue;
        cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

double median(std::span<const double> samples)
{
    if (samples.empty())
        throw UndefinedStatistic("median of an empty sample");
    std::vector<double> sorted(samples.begin(), samples.end());
    const auto k = (sorted.size() - 1) / 2;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(k), sorted.end());
    return sorted[k];
}

double mean(std::span<const double> samples)
{
    if (samples.empty())
        throw UndefinedStatistic("mean of an empty sample");
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

} // namespace sscm
