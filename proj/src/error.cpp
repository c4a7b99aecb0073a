// Copyright 2026 The Translucent Authors
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
//
////////////////////////////////////////////////////////////////////////////////

#include "translucent/error.hpp"

namespace translucent {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kIncompleteFactorization: return "IncompleteFactorization";
    case ErrorCode::kExhausted: return "Exhausted";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kNotGenerator: return "NotGenerator";
    case ErrorCode::kInvalidCount: return "InvalidCount";
    case ErrorCode::kOutOfGroup: return "OutOfGroup";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSessionKeyOutOfGroup: return "SessionKeyOutOfGroup";
    case ErrorCode::kNonceOutOfRange: return "NonceOutOfRange";
    case ErrorCode::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::kInconsistentEvidence: return "InconsistentEvidence";
    case ErrorCode::kNoEvasionPossible: return "NoEvasionPossible";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kVersionError: return "VersionError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace translucent
