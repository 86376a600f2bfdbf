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

#ifndef SSCM_RNG_HPP
#define SSCM_RNG_HPP

#include <cstdint>
#include <random>

namespace sscm {

/// Random source for one channel realization.
///
/// Wraps a 64-bit Mersenne Twister and exposes the handful of distributions the
/// generator draws from. Every distribution object is constructed per call, so
/// the stream consumed by a draw depends only on the engine state and the draw
/// sequence, never on cached distribution state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream for realization `index` of an ensemble seeded with `master_seed`.
    static Rng substream(std::uint64_t master_seed, std::uint64_t index);

    // U[lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi);
    // Integer uniform on the closed range [lo, hi].
    int discrete_uniform(int lo, int hi);
    double normal(double mean, double sigma);
    // Exponential parameterized by its mean.
    double exponential_mean(double mean);
    int poisson(double mean);
    // Zero-mean Laplace whose standard deviation is `sigma` (scale sigma / sqrt(2)).
    double laplace_std(double sigma);

    std::mt19937_64 &engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used for substream seeding.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace sscm

#endif
