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

#ifndef TRANSLUCENT_PROTOCOL_HPP_
#define TRANSLUCENT_PROTOCOL_HPP_

#include <cstdint>
#include <optional>

#include "translucent/escrow_params.hpp"
#include "translucent/modmath.hpp"
#include "translucent/rng.hpp"

namespace translucent {

struct RecipientPublicKey {
  GroupElement y;

  friend bool operator==(const RecipientPublicKey&,
                         const RecipientPublicKey&) = default;
};

// Bob's ElGamal key pair, y = g^x.
struct RecipientKeypair {
  BigNat x;
  GroupElement y;

  RecipientPublicKey public_key() const { return RecipientPublicKey{y}; }

  friend bool operator==(const RecipientKeypair&,
                         const RecipientKeypair&) = default;
};

// {c1, c2; c3, i} = {g^k, s * y_B^k; s * V_i^k, i}. Nothing in the type (or
// anywhere else) ties c3 to V_i: that relation cannot be checked without k
// or s.
struct Ciphertext {
  GroupElement c1;
  GroupElement c2;
  GroupElement c3;
  std::uint32_t i = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// Larry's view of one ciphertext. A candidate is just a group element; it is
// the session key only if the sender used V_ell honestly, which Larry has no
// way to check.
struct EscrowAttempt {
  std::optional<GroupElement> candidate;

  bool attempted() const { return candidate.has_value(); }
};

// Errors: kExponentOutOfRange when x_b is outside [1, rho - 2].
RecipientKeypair recipient_keys_from_secret(const GlobalParams& global,
                                            const BigNat& x_b);
RecipientKeypair gen_recipient_keys(const GlobalParams& global,
                                    RandomSource& rng);

// Errors: kIndexOutOfRange (i outside [1, t]), kSessionKeyOutOfGroup,
// kNonceOutOfRange (k outside [1, rho - 2]).
Ciphertext encrypt(const GlobalParams& global, const GroupElement& y_b,
                   const EscrowParams& params, std::uint32_t i,
                   const GroupElement& s, const BigNat& k);

// The shared body of honest and malformed encryption: the third component is
// s * third_base^k for whatever third_base the sender supplies.
Ciphertext seal(const GlobalParams& global, const GroupElement& y_b,
                const GroupElement& third_base, std::uint32_t i,
                const GroupElement& s, const BigNat& k);

// s = c2 / c1^x_b. Never reads c3.
GroupElement decrypt_recipient(const GlobalParams& global, const BigNat& x_b,
                               const Ciphertext& ct);

// NotAttempted when ct.i != ell (unless force_attempt), otherwise the
// candidate c3 / c1^x_l. Throws kIndexOutOfRange if ct.i exceeds secret.t.
EscrowAttempt decrypt_escrow(const GlobalParams& global,
                             const EscrowSecret& secret, const Ciphertext& ct,
                             bool force_attempt = false);

// Everything a third party can check about a ciphertext: components in the
// group, index inside the published chain. Honest and malformed ciphertexts
// pass alike.
bool passes_public_checks(const GlobalParams& global,
                          const EscrowParams& params, const Ciphertext& ct);

}  // namespace translucent

#endif  // TRANSLUCENT_PROTOCOL_HPP_
