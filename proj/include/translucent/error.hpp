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

#ifndef TRANSLUCENT_ERROR_HPP_
#define TRANSLUCENT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace translucent {

enum class ErrorCode {
  kNotInvertible,
  kIncompleteFactorization,
  kExhausted,
  kNotPrime,
  kNotGenerator,
  kInvalidCount,
  kOutOfGroup,
  kIndexOutOfRange,
  kSessionKeyOutOfGroup,
  kNonceOutOfRange,
  kExponentOutOfRange,
  kInconsistentEvidence,
  kNoEvasionPossible,
  kConfigInvalid,
  kParseError,
  kValidationError,
  kVersionError,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace translucent

#endif  // TRANSLUCENT_ERROR_HPP_
