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

#ifndef TRANSLUCENT_ESCROW_PARAMS_HPP_
#define TRANSLUCENT_ESCROW_PARAMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "translucent/modmath.hpp"
#include "translucent/rng.hpp"

namespace translucent {

// Built-in groups. All three moduli are safe primes p = 2q + 1.
//   toy23   p = 23, g = 5, U pinned to 7 (hand-checkable vectors)
//   test64  largest 64-bit safe prime, g = 2
//   demo512 512-bit safe prime found by searching upward from the binary
//           expansion of pi, g = 5
enum class Preset { kToy23, kTest64, kDemo512 };

std::optional<Preset> parse_preset(std::string_view name);
std::string_view preset_name(Preset preset);

// The public group shared by Bob and Larry: prime modulus, generator and
// the element U whose discrete logarithm nobody knows.
struct GlobalParams {
  BigNat rho;
  GroupElement g;
  GroupElement u;
  // Provenance of u: u == derive_nums_value(seed, rho) unless the preset pins
  // it (toy23 only).
  std::string seed;
  std::optional<std::string> preset;

  friend bool operator==(const GlobalParams&, const GlobalParams&) = default;
};

struct CustomGroup {
  BigNat rho;
  BigNat g;
  std::vector<BigNat> factors;  // distinct prime divisors of rho - 1
  std::string seed;
};

GlobalParams setup_global(Preset preset);
// Errors: kNotPrime, kIncompleteFactorization, kNotGenerator.
GlobalParams setup_global(const CustomGroup& custom);

// Re-checks a GlobalParams obtained from outside (e.g. a file): primality,
// U provenance, and the generator whenever rho - 1 can be factored cheaply.
// Throws Error(kValidationError).
void check_global_params(const GlobalParams& global);

// Larry's trapdoor for one epoch. ell is 1-based.
struct EscrowSecret {
  BigNat rho;
  BigNat x_l;
  std::uint32_t ell = 0;
  std::uint32_t t = 0;
  std::uint64_t epoch = 0;

  friend bool operator==(const EscrowSecret&, const EscrowSecret&) = default;
};

// The published chain V_1..V_t with V_{j+1} = V_j * U.
struct EscrowParams {
  std::vector<GroupElement> chain;
  std::uint64_t epoch = 0;

  std::uint32_t t() const { return static_cast<std::uint32_t>(chain.size()); }
  // 1-based access; throws Error(kIndexOutOfRange).
  const GroupElement& at(std::uint32_t j) const;

  friend bool operator==(const EscrowParams&, const EscrowParams&) = default;
};

struct EscrowKeys {
  EscrowSecret secret;
  EscrowParams params;
};

// Deterministic construction from a chosen trapdoor: V_ell = g^x_l and
// V_j = V_ell * U^(j - ell), negative powers through U^-1.
// Errors: kInvalidCount (t == 0), kIndexOutOfRange (ell), kExponentOutOfRange
// (x_l outside [1, rho - 2]).
EscrowKeys make_escrow_keys(const GlobalParams& global, std::uint32_t t,
                            const BigNat& x_l, std::uint32_t ell,
                            std::uint64_t epoch);

// Draws x_l uniformly from [1, rho - 2], then ell uniformly from [1, t].
EscrowKeys gen_escrow_keys(const GlobalParams& global, std::uint32_t t,
                           RandomSource& rng);

// Fresh, independent (x_l, ell) for epoch previous_epoch + 1.
EscrowKeys rotate_escrow_keys(const GlobalParams& global, std::uint32_t t,
                              RandomSource& rng, std::uint64_t previous_epoch);

// Public well-formedness: V_j / V_1 == U^(j-1) for j in [2, t]. Says nothing
// about whether anyone holds a trapdoor for any V_j.
// Throws Error(kOutOfGroup) if an element is not in the group of `global`,
// Error(kInvalidCount) for an empty chain.
bool verify_escrow_params(const GlobalParams& global,
                          const EscrowParams& params);

}  // namespace translucent

#endif  // TRANSLUCENT_ESCROW_PARAMS_HPP_
