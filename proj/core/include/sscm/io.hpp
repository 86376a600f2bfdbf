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

#ifndef SSCM_IO_HPP
#define SSCM_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "sscm/antenna.hpp"
#include "sscm/channel.hpp"
#include "sscm/stats.hpp"

namespace sscm {

inline constexpr int kChannelSchemaVersion = 1;

nlohmann::json channel_to_json(const OmniChannel &channel);
// Throws ConfigError on a missing field or schema version mismatch.
OmniChannel channel_from_json(const nlohmann::json &j);

// CSV "delay_ns,power_dbm", one row per subpath, ascending delay.
void write_pdp_csv(std::ostream &out, const OmniChannel &channel);
void write_pdp_csv(std::ostream &out, const DirectionalPdp &pdp);
// CSV "az_deg,el_deg,power_dbm".
void write_spectrum_csv(std::ostream &out, const AngularSpectrum &spectrum);
// CSV "value,probability".
void write_cdf_csv(std::ostream &out, std::span<const CdfPoint> cdf);

// Formats a double with enough digits to round-trip.
std::string format_double(double value);

// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path &path, const std::string &text);
std::string read_text_file(const std::filesystem::path &path);

} // namespace sscm

#endif
