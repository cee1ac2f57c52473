// Copyright 2026 The planecolor Authors
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

#include "planecolor/error.h"

#include <string>

namespace planecolor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kInconsistentRotation: return "InconsistentRotation";
    case ErrorCode::kLoopOrMultiEdge: return "LoopOrMultiEdge";
    case ErrorCode::kEulerViolation: return "EulerViolation";
    case ErrorCode::kInvalidOuterFace: return "InvalidOuterFace";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kNotAFourFace: return "NotAFourFace";
    case ErrorCode::kVerticesAdjacent: return "VerticesAdjacent";
    case ErrorCode::kVerticesNotOnFace: return "VerticesNotOnFace";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kHypothesisViolation: return "HypothesisViolation";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kForbiddenCycle: return "ForbiddenCycle";
    case ErrorCode::kImproperColoring: return "ImproperColoring";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kCertificateInvalid: return "CertificateInvalid";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNodeMissing: return "NodeMissing";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kGeneratorPostconditionFailed:
      return "GeneratorPostconditionFailed";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace planecolor
