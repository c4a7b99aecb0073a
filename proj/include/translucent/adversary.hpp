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

#ifndef TRANSLUCENT_ADVERSARY_HPP_
#define TRANSLUCENT_ADVERSARY_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "translucent/escrow_params.hpp"
#include "translucent/protocol.hpp"
#include "translucent/rng.hpp"

namespace translucent {

// A group element guaranteed to be absent from `avoided`.
struct OfflistParameter {
  GroupElement v_hat;
  EscrowParams avoided;
};

// What a disclosure reveals about one past session.
struct RevealedRecord {
  std::uint32_t index_used = 0;
  bool escrow_decrypted = false;
};

struct IndexInference {
  std::optional<std::uint32_t> ell_hat;  // nullopt: Unknown

  bool inferred() const { return ell_hat.has_value(); }
};

// Rejection-samples a uniform element of Z_rho^* until it misses every V_j.
// Throws Error(kExhausted) after 10^6 rejections.
OfflistParameter forge_offlist_parameter(const GlobalParams& global,
                                         const EscrowParams& params,
                                         RandomSource& rng);

// {g^k, s * y_B^k; s * v_hat^k, i}. Bob decrypts it as usual; Larry's
// candidate is s * (v_hat / V_ell)^k.
Ciphertext encrypt_malformed(const GlobalParams& global,
                             const GroupElement& y_b,
                             const GroupElement& v_hat, std::uint32_t i,
                             const GroupElement& s, const BigNat& k);

// Reads ell off any record Larry decrypted. Conflicting positives mean the
// records span more than one epoch: Error(kInconsistentEvidence).
IndexInference infer_escrow_index(std::span<const RevealedRecord> revealed);

// Uniform over [1, t] without known_ell. Error(kNoEvasionPossible) if t < 2.
std::uint32_t choose_evading_index(std::uint32_t t, std::uint32_t known_ell,
                                   RandomSource& rng);

}  // namespace translucent

#endif  // TRANSLUCENT_ADVERSARY_HPP_
