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


#ifndef EQSYNTH_ACCEPTANCE_HPP_
#define EQSYNTH_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace eqsynth::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20260415;
inline constexpr int kNumCriteria = 9;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Criteria are numbered 1..kNumCriteria. All randomness derives from `seed`.
CriterionResult RunCriterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> RunAll(std::uint64_t seed = kDefaultSeed);
// "PASS [3] name: detail (1.2s)"
std::string FormatLine(const CriterionResult& result);

}  // namespace eqsynth::acceptance

#endif  // EQSYNTH_ACCEPTANCE_HPP_
