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

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "oracle.hpp"
#include "translucent/error.hpp"
#include "translucent/rng.hpp"

namespace translucent {
namespace {

using ::translucent::testing::brute_inverse;
using ::translucent::testing::error_code_of;
using ::translucent::testing::naive_pow;
using ::translucent::testing::trial_division_prime;

const BigNat kToyP(23);

GroupElement toy(std::uint64_t v) { return GroupElement(BigNat(v), kToyP); }

TEST(BigNatTest, HexRoundTripAndCanonicalForm) {
  EXPECT_EQ(BigNat(23).to_hex(), "17");
  EXPECT_EQ(BigNat(0).to_hex(), "0");
  EXPECT_EQ(BigNat::from_hex("0x00FF"), BigNat(255));
  EXPECT_EQ(BigNat::from_canonical_hex("ff"), BigNat(255));
  EXPECT_EQ(BigNat::from_canonical_hex("0"), BigNat(0));
  for (const char* bad : {"0ff", "FF", "", "xyz", "-1", "00"}) {
    EXPECT_EQ(error_code_of([&] { BigNat::from_canonical_hex(bad); }),
              ErrorCode::kParseError)
        << bad;
  }
  EXPECT_EQ(BigNat(~0ULL).to_u64(), ~0ULL);
  EXPECT_EQ((BigNat(~0ULL) + BigNat(1)).to_u64(), std::nullopt);
  EXPECT_THROW(BigNat(1) - BigNat(2), std::domain_error);
}

TEST(GroupElementTest, RejectsResiduesOutsideGroup) {
  EXPECT_EQ(error_code_of([] { toy(0); }), ErrorCode::kOutOfGroup);
  EXPECT_EQ(error_code_of([] { toy(23); }), ErrorCode::kOutOfGroup);
  EXPECT_EQ(error_code_of([] { GroupElement(BigNat(1), BigNat(2)); }),
            ErrorCode::kOutOfGroup);
  EXPECT_EQ(error_code_of([] {
              toy(3) * GroupElement(BigNat(3), BigNat(29));
            }),
            ErrorCode::kOutOfGroup);
}

TEST(ModExpTest, WorkedExamples) {
  EXPECT_EQ(mod_exp(toy(5), BigNat(9)), toy(11));
  EXPECT_EQ(mod_exp(toy(5), BigNat(22)), toy(1));
  for (std::uint64_t x = 1; x < 23; ++x) {
    EXPECT_EQ(mod_exp(toy(x), BigNat(0)), toy(1));
  }
}

TEST(ModExpTest, MatchesRepeatedMultiplicationExhaustively) {
  for (std::uint64_t base = 1; base < 23; ++base) {
    for (std::uint64_t e = 0; e <= 1024; ++e) {
      ASSERT_EQ(mod_exp(toy(base), BigNat(e)).residue(),
                BigNat(naive_pow(base, e, 23)))
          << base << "^" << e;
    }
  }
}

TEST(ModExpTest, ExponentsAdd) {
  const BigNat p64 = BigNat::from_hex("fffffffffffffa43");
  SeededRng rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    for (const BigNat& p : {kToyP, p64}) {
      const GroupElement a(uniform_in(rng, BigNat(1), p - BigNat(1)), p);
      const BigNat x = uniform_below(rng, p * p);
      const BigNat y = uniform_below(rng, p * p);
      ASSERT_EQ(mod_exp(a, x + y), mod_exp(a, x) * mod_exp(a, y));
    }
  }
}

TEST(ModInvTest, WorkedExamples) {
  EXPECT_EQ(mod_inv(toy(7)), toy(10));
  EXPECT_EQ(mod_inv(toy(1)), toy(1));
  EXPECT_EQ(mod_inv(toy(20)), toy(15));
}

TEST(ModInvTest, InverseTimesElementIsOne) {
  for (std::uint64_t a = 1; a < 23; ++a) {
    EXPECT_EQ(mod_inv(toy(a)), toy(brute_inverse(a, 23)));
    EXPECT_EQ(mod_inv(toy(a)) * toy(a), toy(1));
  }
  const BigNat p512 = BigNat::from_hex(
      "a43f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89"
      "452821e638d01377be5466cf34e90c6cc0ac29b7c97c50dd3f84d5b5b547fdf7");
  SeededRng rng(7);
  for (int i = 0; i < 100; ++i) {
    const GroupElement a(uniform_in(rng, BigNat(1), p512 - BigNat(1)), p512);
    ASSERT_EQ(mod_inv(a) * a, GroupElement(BigNat(1), p512));
  }
}

TEST(ModInvTest, CompositeModulusWithSharedFactor) {
  // GroupElement does not check primality; a composite modulus surfaces here.
  EXPECT_EQ(error_code_of([] { mod_inv(GroupElement(BigNat(6), BigNat(9))); }),
            ErrorCode::kNotInvertible);
}

TEST(PrimalityTest, WorkedExamples) {
  EXPECT_TRUE(is_probable_prime(BigNat(23)));
  EXPECT_FALSE(is_probable_prime(BigNat(561)));
  EXPECT_FALSE(is_probable_prime(BigNat(1)));
  EXPECT_FALSE(is_probable_prime(BigNat(0)));
  EXPECT_TRUE(is_probable_prime(BigNat(2)));
  EXPECT_TRUE(is_probable_prime(BigNat(3)));
  EXPECT_THROW(is_probable_prime(BigNat(23), 0), std::invalid_argument);
}

TEST(PrimalityTest, AgreesWithTrialDivisionBelow100000) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(is_probable_prime(BigNat(n)), trial_division_prime(n)) << n;
  }
}

TEST(PrimalityTest, LargeValues) {
  const BigNat p64 = BigNat::from_hex("fffffffffffffa43");
  EXPECT_TRUE(is_probable_prime(p64));
  EXPECT_TRUE(is_probable_prime((p64 - BigNat(1)) / BigNat(2)));
  // Largest prime below 2^64 and 2^61 - 1, multiplied: composite, > 2^64.
  const BigNat a = BigNat::from_hex("ffffffffffffffc5");
  const BigNat b = BigNat::from_hex("1fffffffffffffff");
  EXPECT_TRUE(is_probable_prime(a));
  EXPECT_TRUE(is_probable_prime(b));
  EXPECT_FALSE(is_probable_prime(a * b));
  // Smallest strong pseudoprime to bases 2, 3, 5, 7 and 11.
  EXPECT_FALSE(is_probable_prime(BigNat(6763) * BigNat(10627) * BigNat(29947)));
  // 2^127 - 1 is a Mersenne prime.
  const BigNat m127 = BigNat::from_hex("7fffffffffffffffffffffffffffffff");
  EXPECT_TRUE(is_probable_prime(m127));
  EXPECT_FALSE(is_probable_prime(m127 * BigNat(3)));
}

TEST(ValidateGeneratorTest, WorkedExamples) {
  const std::vector<BigNat> factors = {BigNat(2), BigNat(11)};
  EXPECT_TRUE(validate_generator(toy(5), factors));
  EXPECT_FALSE(validate_generator(toy(2), factors));
  EXPECT_FALSE(validate_generator(toy(1), factors));
  const std::vector<BigNat> f29 = {BigNat(2), BigNat(7)};
  EXPECT_FALSE(
      validate_generator(GroupElement(BigNat(1), BigNat(29)), f29));
}

TEST(ValidateGeneratorTest, MatchesOrderOracle) {
  // g generates Z_23^* iff its multiplicative order is 22.
  const std::vector<BigNat> factors = {BigNat(2), BigNat(11)};
  for (std::uint64_t g = 1; g < 23; ++g) {
    std::uint64_t order = 1;
    while (naive_pow(g, order, 23) != 1) ++order;
    EXPECT_EQ(validate_generator(toy(g), factors), order == 22) << g;
  }
}

TEST(ValidateGeneratorTest, IncompleteFactorization) {
  const std::vector<BigNat> only_two = {BigNat(2)};
  const std::vector<BigNat> not_divisor = {BigNat(2), BigNat(11), BigNat(3)};
  const std::vector<BigNat> composite = {BigNat(2), BigNat(22)};
  for (const auto* list : {&only_two, &not_divisor, &composite}) {
    EXPECT_EQ(error_code_of([&] { validate_generator(toy(5), *list); }),
              ErrorCode::kIncompleteFactorization);
  }
}

TEST(FactorGroupOrderTest, SmallAndSafePrimes) {
  EXPECT_EQ(factor_group_order(kToyP),
            (std::vector<BigNat>{BigNat(2), BigNat(11)}));
  EXPECT_EQ(factor_group_order(BigNat(29)),
            (std::vector<BigNat>{BigNat(2), BigNat(7)}));
  EXPECT_EQ(factor_group_order(BigNat(97)),
            (std::vector<BigNat>{BigNat(2), BigNat(3)}));
  const BigNat p64 = BigNat::from_hex("fffffffffffffa43");
  const auto f = factor_group_order(p64);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, (std::vector<BigNat>{BigNat(2), (p64 - BigNat(1)) / BigNat(2)}));
}

// Golden values computed with Python's hashlib over the same byte layout.
TEST(NumsValueTest, GoldenValues) {
  EXPECT_EQ(derive_nums_value("ACLU-1999", kToyP), toy(10));
  EXPECT_EQ(
      derive_nums_value("translucent/test64",
                        BigNat::from_hex("fffffffffffffa43"))
          .residue(),
      BigNat::from_hex("370e6408da663cc5"));
}

TEST(NumsValueTest, DeterministicAndNeverTrivial) {
  EXPECT_EQ(derive_nums_value("seed", kToyP), derive_nums_value("seed", kToyP));
  // p = 5 makes the {0, 1} retry path fire for roughly 40% of seeds.
  for (int i = 0; i < 10000; ++i) {
    const std::string seed = "s" + std::to_string(i);
    for (const BigNat& p : {BigNat(5), kToyP}) {
      const GroupElement u = derive_nums_value(seed, p);
      ASSERT_GE(u.residue(), BigNat(2));
      ASSERT_LT(u.residue(), p);
    }
  }
}

}  // namespace
}  // namespace translucent
