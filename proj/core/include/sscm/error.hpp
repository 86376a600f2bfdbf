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

#ifndef SSCM_ERROR_HPP
#define SSCM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sscm {

// Invalid scenario, parameter override or run configuration.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string &what) : std::invalid_argument(what) {}
};

// Argument outside the mathematical domain of an operation (e.g. d < d0).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string &what) : std::domain_error(what) {}
};

// Statistic requested on empty or zero-power input, or on an outage channel.
class UndefinedStatistic : public std::runtime_error {
public:
    explicit UndefinedStatistic(const std::string &what) : std::runtime_error(what) {}
};

// Beam alignment requested on a channel with no retained subpaths.
class NoPointingError : public std::runtime_error {
public:
    explicit NoPointingError(const std::string &what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace sscm

#endif
