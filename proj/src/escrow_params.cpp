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

#include "translucent/escrow_params.hpp"

#include <string>

#include "translucent/error.hpp"

namespace translucent {
namespace {

constexpr std::string_view kTest64Rho = "fffffffffffffa43";
constexpr std::string_view kDemo512Rho =
    "a43f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89"
    "452821e638d01377be5466cf34e90c6cc0ac29b7c97c50dd3f84d5b5b547fdf7";

void require_exponent(const BigNat& x, const BigNat& rho, const char* what) {
  if (x.is_zero() || x > rho - BigNat(2)) {
    throw Error(ErrorCode::kExponentOutOfRange,
                std::string(what) + " must lie in [1, rho - 2]");
  }
}

GlobalParams safe_prime_preset(std::string_view rho_hex, std::uint64_t g,
                               std::string name) {
  const BigNat rho = BigNat::from_hex(rho_hex);
  std::string seed = "translucent/" + name;
  GroupElement u = derive_nums_value(seed, rho);
  return GlobalParams{rho, GroupElement(BigNat(g), rho), std::move(u),
                      std::move(seed), std::move(name)};
}

}  // namespace

std::optional<Preset> parse_preset(std::string_view name) {
  if (name == "toy23") return Preset::kToy23;
  if (name == "test64") return Preset::kTest64;
  if (name == "demo512") return Preset::kDemo512;
  return std::nullopt;
}

std::string_view preset_name(Preset preset) {
  switch (preset) {
    case Preset::kToy23: return "toy23";
    case Preset::kTest64: return "test64";
    case Preset::kDemo512: return "demo512";
  }
  return "";
}

GlobalParams setup_global(Preset preset) {
  switch (preset) {
    case Preset::kToy23: {
      const BigNat rho(23);
      return GlobalParams{rho, GroupElement(BigNat(5), rho),
                          GroupElement(BigNat(7), rho), "toy23-pinned",
                          "toy23"};
    }
    case Preset::kTest64:
      return safe_prime_preset(kTest64Rho, 2, "test64");
    case Preset::kDemo512:
      return safe_prime_preset(kDemo512Rho, 5, "demo512");
  }
  throw Error(ErrorCode::kConfigInvalid, "unknown preset");
}

GlobalParams setup_global(const CustomGroup& custom) {
  if (custom.rho < BigNat(5) || !is_probable_prime(custom.rho)) {
    throw Error(ErrorCode::kNotPrime,
                "0x" + custom.rho.to_hex() + " is not a prime >= 5");
  }
  if (custom.g.is_zero() || custom.g >= custom.rho) {
    throw Error(ErrorCode::kNotGenerator, "g outside [1, rho - 1]");
  }
  GroupElement g(custom.g, custom.rho);
  if (!validate_generator(g, custom.factors)) {
    throw Error(ErrorCode::kNotGenerator,
                "0x" + custom.g.to_hex() + " does not generate Z_rho^*");
  }
  GroupElement u = derive_nums_value(custom.seed, custom.rho);
  return GlobalParams{custom.rho, std::move(g), std::move(u), custom.seed,
                      std::nullopt};
}

void check_global_params(const GlobalParams& global) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kValidationError, "global params: " + why);
  };
  if (global.g.modulus() != global.rho || global.u.modulus() != global.rho) {
    fail("elements not in the group of rho");
  }
  if (global.preset) {
    const auto preset = parse_preset(*global.preset);
    if (!preset) fail("unknown preset '" + *global.preset + "'");
    if (!(setup_global(*preset) == global)) {
      fail("does not match preset '" + *global.preset + "'");
    }
    return;
  }
  if (global.rho < BigNat(5) || !is_probable_prime(global.rho)) {
    fail("rho is not prime");
  }
  if (global.u.residue() < BigNat(2)) fail("U must be at least 2");
  if (!(derive_nums_value(global.seed, global.rho) == global.u)) {
    fail("U does not match its seed");
  }
  if (const auto factors = factor_group_order(global.rho)) {
    if (!validate_generator(global.g, *factors)) fail("g is not a generator");
  } else if (global.g.residue() == BigNat(1)) {
    fail("g is not a generator");
  }
}

const GroupElement& EscrowParams::at(std::uint32_t j) const {
  if (j == 0 || j > t()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "index " + std::to_string(j) + " outside [1, " +
                    std::to_string(t()) + "]");
  }
  return chain[j - 1];
}

EscrowKeys make_escrow_keys(const GlobalParams& global, std::uint32_t t,
                            const BigNat& x_l, std::uint32_t ell,
                            std::uint64_t epoch) {
  if (t == 0) throw Error(ErrorCode::kInvalidCount, "t must be >= 1");
  if (ell == 0 || ell > t) {
    throw Error(ErrorCode::kIndexOutOfRange, "ell outside [1, t]");
  }
  require_exponent(x_l, global.rho, "x_L");

  const GroupElement good = mod_exp(global.g, x_l);
  const GroupElement u_inv = mod_inv(global.u);
  EscrowParams params;
  params.epoch = epoch;
  params.chain.reserve(t);
  for (std::uint32_t j = 1; j <= t; ++j) {
    if (j >= ell) {
      params.chain.push_back(good * mod_exp(global.u, BigNat(j - ell)));
    } else {
      params.chain.push_back(good * mod_exp(u_inv, BigNat(ell - j)));
    }
  }
  return EscrowKeys{EscrowSecret{global.rho, x_l, ell, t, epoch},
                    std::move(params)};
}

EscrowKeys gen_escrow_keys(const GlobalParams& global, std::uint32_t t,
                           RandomSource& rng) {
  if (t == 0) throw Error(ErrorCode::kInvalidCount, "t must be >= 1");
  const BigNat x_l = uniform_in(rng, BigNat(1), global.rho - BigNat(2));
  const auto ell = static_cast<std::uint32_t>(uniform_u64_in(rng, 1, t));
  return make_escrow_keys(global, t, x_l, ell, 0);
}

EscrowKeys rotate_escrow_keys(const GlobalParams& global, std::uint32_t t,
                              RandomSource& rng,
                              std::uint64_t previous_epoch) {
  EscrowKeys keys = gen_escrow_keys(global, t, rng);
  keys.secret.epoch = previous_epoch + 1;
  keys.params.epoch = previous_epoch + 1;
  return keys;
}

bool verify_escrow_params(const GlobalParams& global,
                          const EscrowParams& params) {
  if (params.chain.empty()) {
    throw Error(ErrorCode::kInvalidCount, "empty escrow chain");
  }
  for (const GroupElement& v : params.chain) {
    if (v.modulus() != global.rho) {
      throw Error(ErrorCode::kOutOfGroup, "chain element from another group");
    }
  }
  const GroupElement first_inv = mod_inv(params.chain.front());
  GroupElement expected(BigNat(1), global.rho);
  for (std::uint32_t j = 2; j <= params.t(); ++j) {
    expected = expected * global.u;
    if (!(params.at(j) * first_inv == expected)) return false;
  }
  return true;
}

}  // namespace translucent
