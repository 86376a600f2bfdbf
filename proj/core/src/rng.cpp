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

#include "sscm/rng.hpp"

#include <cmath>

namespace sscm {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng Rng::substream(std::uint64_t master_seed, std::uint64_t index)
{
    // Two rounds so that neighbouring (seed, index) pairs land far apart.
    const std::uint64_t a = splitmix64(master_seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
    Rng rng(0);
    rng.engine_.seed(seq);
    return rng;
}

double Rng::uniform(double lo, double hi)
{
    if (lo == hi)
        return lo;
    // 53 random bits in [0, 1); avoids the libstdc++ edge case that can return hi.
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double x = lo + (hi - lo) * u;
    return x < hi ? x : std::nextafter(hi, lo);
}

int Rng::discrete_uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

double Rng::normal(double mean, double sigma)
{
    if (sigma == 0.0)
        return mean;
    return std::normal_distribution<double>(mean, sigma)(engine_);
}

double Rng::exponential_mean(double mean)
{
    return std::exponential_distribution<double>(1.0 / mean)(engine_);
}

int Rng::poisson(double mean)
{
    return std::poisson_distribution<int>(mean)(engine_);
}

double Rng::laplace_std(double sigma)
{
    if (sigma == 0.0)
        return 0.0;
    const double b = sigma / std::sqrt(2.0);
    // Inverse CDF on u in (-1/2, 1/2).
    double u = uniform(-0.5, 0.5);
    while (u == -0.5)
        u = uniform(-0.5, 0.5);
    return u < 0.0 ? b * std::log1p(2.0 * u) : -b * std::log1p(-2.0 * u);
}

} // namespace sscm
