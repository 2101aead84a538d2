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

#ifndef SACHS_ERROR_HPP_
#define SACHS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sachs {

enum class ErrorCode {
  kMalformedGraph6,
  kParseError,
  kLoopEdge,
  kDuplicateEdge,
  kVertexOutOfRange,
  kEdgeNotPresent,
  kSizeLimitExceeded,
  kMatchingNotMaximum,
  kKOutOfRange,
  kNotPerfect,
  kFixedPoint,
  kInvalidViolator,
  kMalformedRotation,
  kHypothesisViolated,
  kNotCritical,
  kUnknownContext,
  kContradictionDetected,
  kStreamParseError,
  kInvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sachs

#endif  // SACHS_ERROR_HPP_
