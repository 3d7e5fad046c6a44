// Copyright 2026 The eqsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef EQSYNTH_CLI_HPP_
#define EQSYNTH_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace eqsynth::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDeviation = 1;  // also: a failed certificate or acceptance run
inline constexpr int kInvalid = 2;
inline constexpr int kPattern = 3;

// `args` excludes the program name. Results go to `out` (or --out), errors
// to `err`; invalid inputs also produce an {"errors": [...]} document.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqsynth::cli

#endif  // EQSYNTH_CLI_HPP_
