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

#include "sachs/error.hpp"

namespace sachs {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kEdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kMatchingNotMaximum: return "MatchingNotMaximum";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kNotPerfect: return "NotPerfect";
    case ErrorCode::kFixedPoint: return "FixedPoint";
    case ErrorCode::kInvalidViolator: return "InvalidViolator";
    case ErrorCode::kMalformedRotation: return "MalformedRotation";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNotCritical: return "NotCritical";
    case ErrorCode::kUnknownContext: return "UnknownContext";
    case ErrorCode::kContradictionDetected: return "ContradictionDetected";
    case ErrorCode::kStreamParseError: return "StreamParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sachs
