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

#include "sscm/channel.hpp"

#include <algorithm>
#include <cmath>

namespace sscm {

std::size_t OmniChannel::subpath_count() const
{
    std::size_t n = 0;
    for (const auto &c : clusters)
        n += c.subpaths.size();
    return n;
}

double OmniChannel::total_subpath_power_mw() const
{
    double total = 0.0;
    for (const auto &c : clusters)
        for (const auto &s : c.subpaths)
            total += s.power_mw;
    return total;
}

std::vector<Subpath> OmniChannel::subpaths() const
{
    std::vector<Subpath> out;
    out.reserve(subpath_count());
    for (const auto &c : clusters)
        out.insert(out.end(), c.subpaths.begin(), c.subpaths.end());
    return out;
}

double wrap_azimuth_deg(double az)
{
    double w = std::fmod(az, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w >= 360.0 ? 0.0 : w;
}

double wrap_offset_deg(double delta)
{
    double w = std::fmod(delta, 360.0);
    if (w > 180.0)
        w -= 360.0;
    else if (w <= -180.0)
        w += 360.0;
    return w;
}

double clamp_elevation_deg(double el)
{
    return std::clamp(el, -90.0, 90.0);
}

} // namespace sscm
