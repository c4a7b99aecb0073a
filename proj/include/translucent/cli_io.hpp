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

#ifndef TRANSLUCENT_CLI_IO_HPP_
#define TRANSLUCENT_CLI_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "translucent/error.hpp"
#include "translucent/escrow_params.hpp"
#include "translucent/protocol.hpp"
#include "translucent/wiretap_sim.hpp"

namespace translucent {

// Key and ciphertext files hold a single JSON object on one line:
//
//   {"kind":"ciphertext","version":1,"rho":"17","c1":"a","c2":"9","c3":"7",
//    "i":2,"digest":"..."}
//
// Integers are lowercase hex without leading zeros; counts and indices are
// JSON numbers. "digest" is the first 8 bytes of SHA-256 over the object
// without that field, so that corruption which still parses and validates
// is not read back as a different record.

inline constexpr int kFormatVersion = 1;

enum class RecordKind {
  kGlobal,
  kEscrowPublic,
  kEscrowSecret,
  kRecipientPublic,
  kRecipientSecret,
  kCiphertext,
};

// Alternative order matches RecordKind.
using Record = std::variant<GlobalParams, EscrowParams, EscrowSecret,
                            RecipientPublicKey, RecipientKeypair, Ciphertext>;

std::string_view record_kind_name(RecordKind kind);
RecordKind record_kind(const Record& record);

std::string encode_record(const Record& record);

// Errors: kParseError (malformed text, unknown kind, missing or extra
// fields, non-canonical hex), kVersionError, kValidationError (values
// violate an invariant or the digest does not match).
Record decode_record(std::string_view text);

template <typename T>
T decode_record_as(std::string_view text) {
  Record record = decode_record(text);
  if (T* value = std::get_if<T>(&record)) return std::move(*value);
  throw Error(ErrorCode::kValidationError,
              "unexpected record kind '" +
                  std::string(record_kind_name(record_kind(record))) + "'");
}

// num / den with four decimals, ties to even; computed exactly.
std::string format_rate_fixed4(std::uint64_t num, std::uint64_t den);

// Header plus one row per epoch.
std::string emit_report_csv(const SimReport& report);
std::string emit_report_csv(const SimReport& report,
                            const std::filesystem::path& destination);

// Errors: kIoError.
std::string read_text_file(const std::filesystem::path& path);
// Writes a sibling temporary file and renames it over `path`.
void write_text_file_atomic(const std::filesystem::path& path,
                            std::string_view contents);

}  // namespace translucent

#endif  // TRANSLUCENT_CLI_IO_HPP_
