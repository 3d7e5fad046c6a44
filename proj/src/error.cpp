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

#include "eqsynth/error.hpp"

namespace eqsynth {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDeadEndVertex: return "DeadEndVertex";
    case ErrorCode::kUnknownOwner: return "UnknownOwner";
    case ErrorCode::kMissingStart: return "MissingStart";
    case ErrorCode::kDanglingEdge: return "DanglingEdge";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotAntagonistic: return "NotAntagonistic";
    case ErrorCode::kPatternPresent: return "PatternPresent";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIrreflexivity: return "Irreflexivity";
    case ErrorCode::kTransitivity: return "Transitivity";
    case ErrorCode::kNegativeTransitivity: return "NegativeTransitivity";
  }
  return "Unknown";
}

}  // namespace eqsynth
