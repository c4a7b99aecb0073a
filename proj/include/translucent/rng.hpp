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

#ifndef TRANSLUCENT_RNG_HPP_
#define TRANSLUCENT_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "translucent/modmath.hpp"

namespace translucent {

// Source of uniformly distributed 64-bit words. All sampling in the library
// goes through the helpers below so that a given word stream always yields
// the same values on every platform.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;
};

// std::mt19937_64, whose output sequence is fixed by the C++ standard.
class SeededRng final : public RandomSource {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream keyed by SHA-256(domain || be64(seed) || be64(epoch)
  // || be64(session)); the first 8 digest bytes seed the engine.
  static SeededRng substream(std::uint64_t seed, std::string_view domain,
                             std::uint64_t epoch, std::uint64_t session);

  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Uniform in [0, bound) by masked rejection sampling. bound must be >= 1.
std::uint64_t uniform_u64_below(RandomSource& rng, std::uint64_t bound);
// Uniform in [lo, hi]; requires lo <= hi.
std::uint64_t uniform_u64_in(RandomSource& rng, std::uint64_t lo,
                             std::uint64_t hi);

// Big-integer variants. Words are consumed most significant first and the
// top word is masked to bits(bound - 1).
BigNat uniform_below(RandomSource& rng, const BigNat& bound);
BigNat uniform_in(RandomSource& rng, const BigNat& lo, const BigNat& hi);

}  // namespace translucent

#endif  // TRANSLUCENT_RNG_HPP_
