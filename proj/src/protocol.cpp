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

#include "translucent/protocol.hpp"

#include <string>

#include "translucent/error.hpp"

namespace translucent {
namespace {

void require_in_group(const GlobalParams& global, const GroupElement& e,
                      ErrorCode code, const char* what) {
  if (e.modulus() != global.rho) {
    throw Error(code, std::string(what) + " is not an element of Z_rho^*");
  }
}

}  // namespace

RecipientKeypair recipient_keys_from_secret(const GlobalParams& global,
                                            const BigNat& x_b) {
  if (x_b.is_zero() || x_b > global.rho - BigNat(2)) {
    throw Error(ErrorCode::kExponentOutOfRange, "x_B must lie in [1, rho - 2]");
  }
  return RecipientKeypair{x_b, mod_exp(global.g, x_b)};
}

RecipientKeypair gen_recipient_keys(const GlobalParams& global,
                                    RandomSource& rng) {
  return recipient_keys_from_secret(
      global, uniform_in(rng, BigNat(1), global.rho - BigNat(2)));
}

Ciphertext seal(const GlobalParams& global, const GroupElement& y_b,
                const GroupElement& third_base, std::uint32_t i,
                const GroupElement& s, const BigNat& k) {
  if (i == 0) throw Error(ErrorCode::kIndexOutOfRange, "index must be >= 1");
  require_in_group(global, s, ErrorCode::kSessionKeyOutOfGroup, "s");
  require_in_group(global, y_b, ErrorCode::kOutOfGroup, "y_B");
  require_in_group(global, third_base, ErrorCode::kOutOfGroup, "V");
  if (k.is_zero() || k > global.rho - BigNat(2)) {
    throw Error(ErrorCode::kNonceOutOfRange, "k must lie in [1, rho - 2]");
  }
  return Ciphertext{mod_exp(global.g, k), s * mod_exp(y_b, k),
                    s * mod_exp(third_base, k), i};
}

Ciphertext encrypt(const GlobalParams& global, const GroupElement& y_b,
                   const EscrowParams& params, std::uint32_t i,
                   const GroupElement& s, const BigNat& k) {
  return seal(global, y_b, params.at(i), i, s, k);
}

GroupElement decrypt_recipient(const GlobalParams& global, const BigNat& x_b,
                               const Ciphertext& ct) {
  require_in_group(global, ct.c1, ErrorCode::kOutOfGroup, "c1");
  require_in_group(global, ct.c2, ErrorCode::kOutOfGroup, "c2");
  return ct.c2 * mod_inv(mod_exp(ct.c1, x_b));
}

EscrowAttempt decrypt_escrow(const GlobalParams& global,
                             const EscrowSecret& secret, const Ciphertext& ct,
                             bool force_attempt) {
  if (ct.i == 0 || ct.i > secret.t) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "ciphertext index " + std::to_string(ct.i) +
                    " outside the escrow chain");
  }
  if (ct.i != secret.ell && !force_attempt) return EscrowAttempt{};
  require_in_group(global, ct.c1, ErrorCode::kOutOfGroup, "c1");
  require_in_group(global, ct.c3, ErrorCode::kOutOfGroup, "c3");
  return EscrowAttempt{ct.c3 * mod_inv(mod_exp(ct.c1, secret.x_l))};
}

bool passes_public_checks(const GlobalParams& global,
                          const EscrowParams& params, const Ciphertext& ct) {
  const bool in_group = ct.c1.modulus() == global.rho &&
                        ct.c2.modulus() == global.rho &&
                        ct.c3.modulus() == global.rho;
  return in_group && ct.i >= 1 && ct.i <= params.t();
}

}  // namespace translucent
