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

#ifndef SSCM_STATS_HPP
#define SSCM_STATS_HPP

#include <span>
#include <utility>
#include <vector>

#include "sscm/antenna.hpp"
#include "sscm/channel.hpp"

namespace sscm {

struct DelayPower {
    double delay_ns = 0.0;
    double power_mw = 0.0;
};

// Power-weighted RMS delay spread. Throws UndefinedStatistic on empty or zero-power input.
double rms_delay_spread(std::span<const DelayPower> taps);
double rms_delay_spread(const OmniChannel &channel);
double rms_delay_spread(const DirectionalPdp &pdp);

struct AngularSample {
    double az_deg = 0.0;
    double el_deg = 0.0;
    double power_mw = 0.0;
};

/// Marginal angular power spectrum at one link end: the point-mass support of
/// the joint AOD-AOA spectrum, with each subpath contributing |a|^2.
struct AngularSpectrum {
    LobeKind kind = LobeKind::AOA;
    std::vector<AngularSample> samples;

    double total_power_mw() const;
};

// Throws UndefinedStatistic on an outage channel.
AngularSpectrum angular_spectrum(const OmniChannel &channel, LobeKind kind);

/// Azimuth power histogram.
///
/// With `scan_hpbw_deg` > 0 each bin holds the power a Gaussian-beam receiver
/// of that azimuth beamwidth and unit peak gain would collect when pointed at
/// the bin center, i.e. the spectrum as seen by an antenna sweep. With 0 each
/// bin holds the summed power of the samples falling in it.
struct AzimuthBins {
    double bin_width_deg = 1.0;
    std::vector<double> power_mw;

    std::size_t bin_of(double az_deg) const;
    double center_deg(std::size_t bin) const;
};

AzimuthBins bin_azimuth(const AngularSpectrum &spectrum, double bin_width_deg = 1.0, double scan_hpbw_deg = 0.0);

enum class AngleAxis { Azimuth, Elevation };

/// Global RMS angular spread in degrees.
///
/// Azimuth uses the circular definition: for every shift on a grid of
/// `shift_step_deg` over [-180, 180), angles are shifted, wrapped, centered on
/// their power-weighted mean and wrapped again; the smallest RMS is returned.
/// Elevation is the plain power-weighted RMS about the mean.
double global_angular_spread(const AngularSpectrum &spectrum, AngleAxis axis, double shift_step_deg = 1.0);

struct LobeOptions {
    double threshold_db = -10.0;
    double bin_width_deg = 1.0;
    double scan_hpbw_deg = 0.0;
};

// A run of contiguous azimuth bins (may wrap through 0 deg).
struct LobeSegment {
    std::size_t first_bin = 0;
    std::size_t n_bins = 0;
    double bin_width_deg = 1.0;
    double power_mw = 0.0; // sample power inside the segment

    bool contains(double az_deg) const;
    double center_deg() const;
};

/// Maximal runs of bins at or above peak + threshold_db, ordered by descending contained power.
std::vector<LobeSegment> segment_lobes(const AngularSpectrum &spectrum, const LobeOptions &options = {});

struct LobeStats {
    int lobe_id = 1;
    double power_fraction = 0.0;
    double rms_az_spread_deg = 0.0;
    double rms_el_spread_deg = 0.0;
    double mean_az_deg = 0.0;
    double mean_el_deg = 0.0;
};

// Power-weighted mean and RMS spread of the samples inside `segment`, azimuth unwrapped about its center.
LobeStats rms_lobe_spread(const AngularSpectrum &spectrum, const LobeSegment &segment, int lobe_id = 1);

std::vector<LobeStats> lobe_statistics(const AngularSpectrum &spectrum, const LobeOptions &options = {});

struct CdfPoint {
    double value = 0.0;
    double probability = 0.0;
};

// Right-continuous empirical CDF evaluated at each distinct sample value.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples);
// Lower median: the ceil(n/2)-th smallest sample.
double median(std::span<const double> samples);
double mean(std::span<const double> samples);

} // namespace sscm

#endif
