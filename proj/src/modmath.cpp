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

#include "translucent/modmath.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "translucent/error.hpp"
#include "translucent/hash.hpp"
#include "translucent/rng.hpp"

namespace translucent {
namespace {

constexpr int kNumsMaxAttempts = 1000;
constexpr unsigned long kTrialDivisionLimit = 1UL << 16;

bool is_hex_digit(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) != 0;
}

BigNat parse_hex_digits(std::string_view digits) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), is_hex_digit)) {
    throw Error(ErrorCode::kParseError,
                "not a hexadecimal integer: '" + std::string(digits) + "'");
  }
  return BigNat::from_mpz(mpz_class(std::string(digits), 16));
}

// Miller-Rabin witness loop for odd n > 3 with n - 1 = d * 2^r.
bool passes_base(const mpz_class& n, const mpz_class& n_minus_1,
                 const mpz_class& d, unsigned long r, const mpz_class& base) {
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

BigNat::BigNat(std::uint64_t value) {
  // mpz_class has no portable uint64_t constructor on all ABIs.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
}

BigNat BigNat::from_hex(std::string_view hex) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  return parse_hex_digits(hex);
}

BigNat BigNat::from_canonical_hex(std::string_view hex) {
  const bool lower = std::none_of(hex.begin(), hex.end(), [](char c) {
    return c >= 'A' && c <= 'F';
  });
  if (!lower || (hex.size() > 1 && hex[0] == '0')) {
    throw Error(ErrorCode::kParseError,
                "non-canonical hexadecimal integer: '" + std::string(hex) + "'");
  }
  return parse_hex_digits(hex);
}

BigNat BigNat::from_bytes_be(std::span<const std::uint8_t> bytes) {
  BigNat out;
  if (!bytes.empty()) {
    mpz_import(out.value_.get_mpz_t(), bytes.size(), 1, 1, 0, 0, bytes.data());
  }
  return out;
}

BigNat BigNat::from_mpz(mpz_class value) {
  if (sgn(value) < 0) throw std::domain_error("BigNat: negative value");
  BigNat out;
  out.value_ = std::move(value);
  return out;
}

std::string BigNat::to_hex() const { return value_.get_str(16); }

std::string BigNat::to_decimal() const { return value_.get_str(10); }

std::optional<std::uint64_t> BigNat::to_u64() const {
  if (bit_length() > 64) return std::nullopt;
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return count == 0 ? 0 : out;
}

std::size_t BigNat::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

bool BigNat::test_bit(std::size_t bit) const {
  return mpz_tstbit(value_.get_mpz_t(), bit) != 0;
}

BigNat operator+(const BigNat& a, const BigNat& b) {
  return BigNat::from_mpz(a.value_ + b.value_);
}

BigNat operator-(const BigNat& a, const BigNat& b) {
  if (a < b) throw std::domain_error("BigNat: subtraction underflow");
  return BigNat::from_mpz(a.value_ - b.value_);
}

BigNat operator*(const BigNat& a, const BigNat& b) {
  return BigNat::from_mpz(a.value_ * b.value_);
}

BigNat operator/(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw std::domain_error("BigNat: division by zero");
  return BigNat::from_mpz(a.value_ / b.value_);
}

BigNat operator%(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw std::domain_error("BigNat: division by zero");
  return BigNat::from_mpz(a.value_ % b.value_);
}

GroupElement::GroupElement(BigNat residue, BigNat modulus)
    : residue_(std::move(residue)), modulus_(std::move(modulus)) {
  if (modulus_ < BigNat(3)) {
    throw Error(ErrorCode::kOutOfGroup, "modulus must be at least 3");
  }
  if (residue_.is_zero() || residue_ >= modulus_) {
    throw Error(ErrorCode::kOutOfGroup, "residue 0x" + residue_.to_hex() +
                                            " not in [1, 0x" +
                                            modulus_.to_hex() + " - 1]");
  }
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(ErrorCode::kOutOfGroup, "operands live in different groups");
  }
  return GroupElement((a.residue() * b.residue()) % a.modulus(), a.modulus());
}

BigNat pow_mod(const BigNat& base, const BigNat& exponent,
               const BigNat& modulus) {
  if (modulus.is_zero()) throw std::domain_error("pow_mod: zero modulus");
  const mpz_class& m = modulus.mpz();
  const mpz_class b = base.mpz() % m;
  mpz_class result = 1;
  result %= m;
  for (std::size_t bit = exponent.bit_length(); bit-- > 0;) {
    result = (result * result) % m;
    if (exponent.test_bit(bit)) result = (result * b) % m;
  }
  return BigNat::from_mpz(std::move(result));
}

GroupElement mod_exp(const GroupElement& base, const BigNat& exponent) {
  return GroupElement(pow_mod(base.residue(), exponent, base.modulus()),
                      base.modulus());
}

GroupElement mod_inv(const GroupElement& a) {
  // Invariant: old_s * a == old_r (mod m), s * a == r (mod m).
  const mpz_class& m = a.modulus().mpz();
  mpz_class old_r = a.residue().mpz(), r = m;
  mpz_class old_s = 1, s = 0;
  while (r != 0) {
    const mpz_class q = old_r / r;
    mpz_class tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::kNotInvertible,
                "0x" + a.residue().to_hex() + " shares a factor with modulus");
  }
  mpz_class inv = old_s % m;
  if (inv < 0) inv += m;
  return GroupElement(BigNat::from_mpz(std::move(inv)), a.modulus());
}

bool is_probable_prime(const BigNat& n, unsigned rounds) {
  if (rounds == 0) throw std::invalid_argument("rounds must be >= 1");
  if (n < BigNat(2)) return false;
  static constexpr std::array<unsigned, 12> kSmallPrimes = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned p : kSmallPrimes) {
    if (n == BigNat(p)) return true;
    if ((n % BigNat(p)).is_zero()) return false;
  }

  const mpz_class& nz = n.mpz();
  const mpz_class n_minus_1 = nz - 1;
  mpz_class d = n_minus_1;
  unsigned long r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++r;
  }

  if (n.bit_length() <= 64) {
    // Deterministic for n < 3.3e24.
    return std::all_of(kSmallPrimes.begin(), kSmallPrimes.end(),
                       [&](unsigned base) {
                         return passes_base(nz, n_minus_1, d, r, mpz_class(base));
                       });
  }

  const Digest256 digest = sha256("miller-rabin:" + n.to_hex());
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
  SeededRng rng(seed);
  const BigNat lo(2), hi = n - BigNat(2);
  for (unsigned i = 0; i < rounds; ++i) {
    const BigNat base = uniform_in(rng, lo, hi);
    if (!passes_base(nz, n_minus_1, d, r, base.mpz())) return false;
  }
  return true;
}

bool validate_generator(const GroupElement& g,
                        std::span<const BigNat> prime_factors_of_order) {
  const BigNat order = g.modulus() - BigNat(1);
  BigNat cofactor = order;
  for (const BigNat& q : prime_factors_of_order) {
    if (q < BigNat(2) || !(order % q).is_zero() || !is_probable_prime(q)) {
      throw Error(ErrorCode::kIncompleteFactorization,
                  "0x" + q.to_hex() + " is not a prime divisor of p - 1");
    }
    while ((cofactor % q).is_zero()) cofactor = cofactor / q;
  }
  if (cofactor != BigNat(1)) {
    throw Error(ErrorCode::kIncompleteFactorization,
                "p - 1 has an unlisted factor 0x" + cofactor.to_hex());
  }
  return std::all_of(prime_factors_of_order.begin(),
                     prime_factors_of_order.end(), [&](const BigNat& q) {
                       return pow_mod(g.residue(), order / q, g.modulus()) !=
                              BigNat(1);
                     });
}

std::optional<std::vector<BigNat>> factor_group_order(const BigNat& p) {
  if (p < BigNat(3)) return std::nullopt;
  const BigNat order = p - BigNat(1);
  std::vector<BigNat> factors;
  BigNat rest = order;
  auto strip = [&](const BigNat& q) {
    if (!(rest % q).is_zero()) return;
    factors.push_back(q);
    while ((rest % q).is_zero()) rest = rest / q;
  };
  strip(BigNat(2));
  if (rest == BigNat(1)) return factors;
  if (is_probable_prime(rest)) {
    factors.push_back(rest);
    return factors;
  }
  for (unsigned long d = 3; d < kTrialDivisionLimit; d += 2) {
    const BigNat q(d);
    if (q * q > rest) break;
    strip(q);
  }
  if (rest == BigNat(1)) return factors;
  if (!is_probable_prime(rest)) return std::nullopt;
  factors.push_back(rest);
  return factors;
}

GroupElement derive_nums_value(std::span<const std::uint8_t> seed,
                               const BigNat& p) {
  if (p < BigNat(5)) {
    throw std::invalid_argument("derive_nums_value: modulus must be >= 5");
  }
  const std::size_t blocks = (p.bit_length() + 255) / 256;
  std::uint64_t counter = 0;
  for (int attempt = 0; attempt < kNumsMaxAttempts; ++attempt) {
    std::vector<std::uint8_t> material;
    material.reserve(blocks * 32);
    for (std::size_t b = 0; b < blocks; ++b) {
      std::vector<std::uint8_t> input(seed.begin(), seed.end());
      append_u64_be(counter++, input);
      const Digest256 digest = sha256(input);
      material.insert(material.end(), digest.begin(), digest.end());
    }
    BigNat candidate = BigNat::from_bytes_be(material) % p;
    if (candidate >= BigNat(2)) return GroupElement(std::move(candidate), p);
  }
  throw Error(ErrorCode::kExhausted, "no NUMS value after 1000 attempts");
}

GroupElement derive_nums_value(std::string_view seed, const BigNat& p) {
  return derive_nums_value(
      std::span<const std::uint8_t>(
          reinterpret_cast<const std::uint8_t*>(seed.data()), seed.size()),
      p);
}

}  // namespace translucent
