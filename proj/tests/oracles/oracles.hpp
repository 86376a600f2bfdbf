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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library's statistic implementations.

#ifndef SSCM_TESTS_ORACLES_HPP
#define SSCM_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace sscm::oracle {

struct WeightedPoint {
    double value;
    double weight;
};

// Second central moment, two passes in long double with no origin shift.
// (One-pass m2 - m1^2 leaves ~1e-7 ns of rounding noise on single-tap inputs.)
inline double rms_delay_spread(const std::vector<WeightedPoint> &taps)
{
    long double p = 0, m1 = 0;
    for (const auto &t : taps) {
        p += t.weight;
        m1 += static_cast<long double>(t.weight) * t.value;
    }
    m1 /= p;
    long double var = 0;
    for (const auto &t : taps) {
        const long double d = t.value - m1;
        var += t.weight * d * d;
    }
    return static_cast<double>(std::sqrt(var / p));
}

// 3GPP-style circular angular spread, radians internally, with an arbitrary shift grid in degrees.
inline double circular_spread_deg(const std::vector<WeightedPoint> &angles_deg, double grid_deg)
{
    constexpr double pi = std::numbers::pi;
    auto wrap = [&](double x) { // into [-pi, pi)
        return std::fmod(std::fmod(x + pi, 2 * pi) + 2 * pi, 2 * pi) - pi;
    };
    double p = 0;
    for (const auto &a : angles_deg)
        p += a.weight;
    double best = std::numeric_limits<double>::infinity();
    const int steps = static_cast<int>(std::lround(360.0 / grid_deg));
    for (int k = 0; k < steps; ++k) {
        const double shift = (-180.0 + k * grid_deg) * pi / 180.0;
        double mu = 0;
        for (const auto &a : angles_deg)
            mu += a.weight * wrap(a.value * pi / 180.0 + shift);
        mu /= p;
        double var = 0;
        for (const auto &a : angles_deg) {
            const double d = wrap(wrap(a.value * pi / 180.0 + shift) - mu);
            var += a.weight * d * d;
        }
        best = std::min(best, std::sqrt(var / p) * 180.0 / pi);
    }
    return best;
}

// E[min(l_max, max(1, K))], K ~ Poisson(mu), by summing the pmf.
inline double truncated_poisson_mean(double mu, int l_max)
{
    double pmf = std::exp(-mu);
    double e = 0;
    for (int k = 0; k < 400; ++k) {
        e += std::min(l_max, std::max(1, k)) * pmf;
        pmf *= mu / (k + 1);
    }
    return e;
}

// Upper 1% points used by the goodness-of-fit checks.
inline constexpr double kChiSquare99Dof29 = 49.58788447289881;
inline constexpr double kKolmogorov99 = 1.6276236115189502;

// One-sample Kolmogorov-Smirnov statistic D against U[lo, hi).
inline double ks_uniform(std::vector<double> x, double lo, double hi)
{
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = (x[i] - lo) / (hi - lo);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

inline double sample_mean(const std::vector<double> &x)
{
    long double s = 0;
    for (double v : x)
        s += v;
    return static_cast<double>(s / x.size());
}

inline double sample_std(const std::vector<double> &x)
{
    const double m = sample_mean(x);
    long double s = 0;
    for (double v : x)
        s += (v - m) * (v - m);
    return static_cast<double>(std::sqrt(s / (x.size() - 1)));
}

} // namespace sscm::oracle

#endif
