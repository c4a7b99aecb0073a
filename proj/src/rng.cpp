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

#include "translucent/rng.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "translucent/hash.hpp"

namespace translucent {

SeededRng SeededRng::substream(std::uint64_t seed, std::string_view domain,
                               std::uint64_t epoch, std::uint64_t session) {
  std::vector<std::uint8_t> input(domain.begin(), domain.end());
  append_u64_be(seed, input);
  append_u64_be(epoch, input);
  append_u64_be(session, input);
  const Digest256 digest = sha256(input);
  std::uint64_t key = 0;
  for (int i = 0; i < 8; ++i) key = (key << 8) | digest[i];
  return SeededRng(key);
}

std::uint64_t uniform_u64_below(RandomSource& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_u64_below: bound 0");
  if (bound == 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const std::uint64_t mask = bits == 64 ? ~0ULL : ((1ULL << bits) - 1);
  for (;;) {
    const std::uint64_t candidate = rng.next_u64() & mask;
    if (candidate < bound) return candidate;
  }
}

std::uint64_t uniform_u64_in(RandomSource& rng, std::uint64_t lo,
                             std::uint64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_u64_in: empty range");
  if (lo == 0 && hi == ~0ULL) return rng.next_u64();
  return lo + uniform_u64_below(rng, hi - lo + 1);
}

BigNat uniform_below(RandomSource& rng, const BigNat& bound) {
  if (bound.is_zero()) throw std::invalid_argument("uniform_below: bound 0");
  if (bound == BigNat(1)) return BigNat(0);
  const std::size_t bits = (bound - BigNat(1)).bit_length();
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
  for (;;) {
    mpz_class acc = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng.next_u64();
      if (w == 0) word &= top_mask;
      acc <<= 64;
      acc += BigNat(word).mpz();
    }
    BigNat candidate = BigNat::from_mpz(std::move(acc));
    if (candidate < bound) return candidate;
  }
}

BigNat uniform_in(RandomSource& rng, const BigNat& lo, const BigNat& hi) {
  if (lo > hi) throw std::invalid_argument("uniform_in: empty range");
  return lo + uniform_below(rng, hi - lo + BigNat(1));
}

}  // namespace translucent
