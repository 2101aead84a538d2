// Copyright 2026 The sachs-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SACHS_CLI_HPP_
#define SACHS_CLI_HPP_

#include <iosfwd>

namespace sachs {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitContradiction = 3;

// Runs one sachs-lab subcommand. Graphs not given by flag are read from `in`.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace sachs

#endif  // SACHS_CLI_HPP_
