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

#ifndef SSCM_TOOLS_CLI_HPP
#define SSCM_TOOLS_CLI_HPP

#include <iosfwd>

namespace sscm::cli {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kConfigError = 2, kIoError = 3 };

// Entry point shared by the executable and the CLI tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace sscm::cli

#endif
