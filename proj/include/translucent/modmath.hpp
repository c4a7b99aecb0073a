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

#ifndef TRANSLUCENT_MODMATH_HPP_
#define TRANSLUCENT_MODMATH_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace translucent {

// Non-negative arbitrary-precision integer. GMP provides the limb
// arithmetic; every operation that could go negative is checked.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  // Accepts either case and leading zeros; an optional "0x" prefix.
  static BigNat from_hex(std::string_view hex);
  // Only the canonical form produced by to_hex(): lowercase, no leading
  // zeros, "0" for zero.
  static BigNat from_canonical_hex(std::string_view hex);
  static BigNat from_bytes_be(std::span<const std::uint8_t> bytes);
  static BigNat from_mpz(mpz_class value);

  std::string to_hex() const;
  std::string to_decimal() const;
  std::optional<std::uint64_t> to_u64() const;

  std::size_t bit_length() const;
  bool test_bit(std::size_t bit) const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

  const mpz_class& mpz() const { return value_; }

  friend BigNat operator+(const BigNat& a, const BigNat& b);
  // Throws std::domain_error if b > a.
  friend BigNat operator-(const BigNat& a, const BigNat& b);
  friend BigNat operator*(const BigNat& a, const BigNat& b);
  friend BigNat operator/(const BigNat& a, const BigNat& b);
  friend BigNat operator%(const BigNat& a, const BigNat& b);

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

// An element of the multiplicative group modulo an odd prime. The residue is
// always in [1, modulus - 1]; primality of the modulus is the caller's
// responsibility (checked once, in GlobalParams).
class GroupElement {
 public:
  // Throws Error(kOutOfGroup) when residue is outside [1, modulus - 1] or the
  // modulus is smaller than 3.
  GroupElement(BigNat residue, BigNat modulus);

  const BigNat& residue() const { return residue_; }
  const BigNat& modulus() const { return modulus_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.residue_ == b.residue_ && a.modulus_ == b.modulus_;
  }

 private:
  BigNat residue_;
  BigNat modulus_;
};

// Product in the group; throws Error(kOutOfGroup) on mismatched moduli.
GroupElement operator*(const GroupElement& a, const GroupElement& b);

// base^exponent mod modulus by left-to-right square-and-multiply.
// Works for any modulus >= 1; used by the group operations and by the
// primality test on composite candidates.
BigNat pow_mod(const BigNat& base, const BigNat& exponent,
               const BigNat& modulus);

GroupElement mod_exp(const GroupElement& base, const BigNat& exponent);

// Inverse by the extended Euclidean algorithm.
GroupElement mod_inv(const GroupElement& a);

// Miller-Rabin. Below 2^64 the fixed base set {2, 3, ..., 37} is used and the
// answer is exact; above, `rounds` bases are drawn from a generator seeded by
// a hash of n, so the result is a pure function of (n, rounds).
bool is_probable_prime(const BigNat& n, unsigned rounds = 40);

// True iff g^((p-1)/q) != 1 for every listed prime q | p-1. The list must be
// the complete set of distinct prime divisors of p-1; otherwise throws
// Error(kIncompleteFactorization).
bool validate_generator(const GroupElement& g,
                        std::span<const BigNat> prime_factors_of_order);

// Distinct prime factors of p-1 by trial division plus a primality check of
// the remaining cofactor. nullopt when the cofactor is composite and too large
// to split (the order cannot be factored cheaply).
std::optional<std::vector<BigNat>> factor_group_order(const BigNat& p);

// Nothing-up-my-sleeve element: SHA-256(seed || be64(counter)) blocks are
// concatenated (counter increasing across blocks and across retries) until
// they cover bits(p) bits, read big-endian and reduced mod p. Results 0 and 1
// are rejected and the next counter values are used. Throws Error(kExhausted)
// after 1000 attempts.
GroupElement derive_nums_value(std::span<const std::uint8_t> seed,
                               const BigNat& p);
GroupElement derive_nums_value(std::string_view seed, const BigNat& p);

}  // namespace translucent

#endif  // TRANSLUCENT_MODMATH_HPP_
