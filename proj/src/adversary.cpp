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

#include "translucent/adversary.hpp"

#include <algorithm>
#include <string>

#include "translucent/error.hpp"

namespace translucent {
namespace {

constexpr int kMaxRejections = 1'000'000;

}  // namespace

OfflistParameter forge_offlist_parameter(const GlobalParams& global,
                                         const EscrowParams& params,
                                         RandomSource& rng) {
  const BigNat hi = global.rho - BigNat(1);
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    GroupElement candidate(uniform_in(rng, BigNat(1), hi), global.rho);
    const bool on_list =
        std::find(params.chain.begin(), params.chain.end(), candidate) !=
        params.chain.end();
    if (!on_list) return OfflistParameter{std::move(candidate), params};
  }
  throw Error(ErrorCode::kExhausted, "no off-list element found");
}

Ciphertext encrypt_malformed(const GlobalParams& global,
                             const GroupElement& y_b,
                             const GroupElement& v_hat, std::uint32_t i,
                             const GroupElement& s, const BigNat& k) {
  return seal(global, y_b, v_hat, i, s, k);
}

IndexInference infer_escrow_index(std::span<const RevealedRecord> revealed) {
  IndexInference out;
  for (const RevealedRecord& r : revealed) {
    if (!r.escrow_decrypted) continue;
    if (out.ell_hat && *out.ell_hat != r.index_used) {
      throw Error(ErrorCode::kInconsistentEvidence,
                  "decrypted sessions used indices " +
                      std::to_string(*out.ell_hat) + " and " +
                      std::to_string(r.index_used));
    }
    out.ell_hat = r.index_used;
  }
  return out;
}

std::uint32_t choose_evading_index(std::uint32_t t, std::uint32_t known_ell,
                                   RandomSource& rng) {
  if (t < 2) {
    throw Error(ErrorCode::kNoEvasionPossible, "a single-key chain has no "
                                               "other index");
  }
  if (known_ell == 0 || known_ell > t) {
    throw Error(ErrorCode::kIndexOutOfRange, "known ell outside [1, t]");
  }
  const auto pick = static_cast<std::uint32_t>(uniform_u64_in(rng, 1, t - 1));
  return pick >= known_ell ? pick + 1 : pick;
}

}  // namespace translucent
