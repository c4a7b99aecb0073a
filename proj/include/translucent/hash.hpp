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

#ifndef TRANSLUCENT_HASH_HPP_
#define TRANSLUCENT_HASH_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace translucent {

using Digest256 = std::array<std::uint8_t, 32>;

Digest256 sha256(std::span<const std::uint8_t> data);
Digest256 sha256(std::string_view data);

// Appends `value` as 8 big-endian bytes.
void append_u64_be(std::uint64_t value, std::vector<std::uint8_t>& out);

}  // namespace translucent

#endif  // TRANSLUCENT_HASH_HPP_
