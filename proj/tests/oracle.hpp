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

// Test-only oracles. Nothing here calls into the library's arithmetic: powers
// are repeated multiplications, inverses and logarithms are exhaustive scans,
// primality is trial division.

#ifndef TRANSLUCENT_TESTS_ORACLE_HPP_
#define TRANSLUCENT_TESTS_ORACLE_HPP_

#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <stdexcept>

#include "translucent/error.hpp"
#include "translucent/rng.hpp"

namespace translucent::testing {

inline std::uint64_t naive_pow(std::uint64_t base, std::uint64_t exp,
                               std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  for (std::uint64_t i = 0; i < exp; ++i) r = (r * (base % mod)) % mod;
  return r;
}

inline std::uint64_t brute_inverse(std::uint64_t a, std::uint64_t mod) {
  for (std::uint64_t b = 1; b < mod; ++b) {
    if ((a * b) % mod == 1) return b;
  }
  throw std::logic_error("no inverse");
}

// Smallest x >= 0 with g^x == y (mod p).
inline std::optional<std::uint64_t> brute_log(std::uint64_t g, std::uint64_t y,
                                              std::uint64_t p) {
  std::uint64_t acc = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    if (acc == y % p) return x;
    acc = (acc * g) % p;
  }
  return std::nullopt;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Replays a fixed list of words, then fails loudly.
class ScriptedSource final : public RandomSource {
 public:
  ScriptedSource(std::initializer_list<std::uint64_t> words) : words_(words) {}

  std::uint64_t next_u64() override {
    if (words_.empty()) throw std::logic_error("scripted source exhausted");
    const std::uint64_t w = words_.front();
    words_.pop_front();
    return w;
  }

  std::size_t remaining() const { return words_.size(); }

 private:
  std::deque<std::uint64_t> words_;
};

// The code of the Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace translucent::testing

#endif  // TRANSLUCENT_TESTS_ORACLE_HPP_
