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

// Command-line front end. Each command loads records, calls one or two
// library operations and writes records back; no group arithmetic lives here.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 validation or verification
// failure.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "translucent/adversary.hpp"
#include "translucent/cli_io.hpp"
#include "translucent/error.hpp"
#include "translucent/escrow_params.hpp"
#include "translucent/protocol.hpp"
#include "translucent/rng.hpp"
#include "translucent/wiretap_sim.hpp"

namespace {

using namespace translucent;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
T load(const std::string& path) {
  return decode_record_as<T>(read_text_file(path));
}

void save(const std::string& path, const Record& record) {
  write_text_file_atomic(path, encode_record(record));
}

void require_same_group(const GlobalParams& global, const BigNat& rho,
                        const std::string& what) {
  if (rho != global.rho) {
    throw Error(ErrorCode::kValidationError,
                what + " belongs to a different group than --global");
  }
}

GroupElement session_key(const GlobalParams& global, const std::string& hex) {
  BigNat s = BigNat::from_hex(hex);
  if (s.is_zero() || s >= global.rho) {
    throw Error(ErrorCode::kSessionKeyOutOfGroup, "s outside [1, rho - 1]");
  }
  return GroupElement(std::move(s), global.rho);
}

struct SetupArgs {
  std::string preset, rho, g, seed, out;
  std::vector<std::string> factors;
};

int run_setup(const SetupArgs& a) {
  std::optional<GlobalParams> global;
  if (!a.preset.empty()) {
    const auto preset = parse_preset(a.preset);
    if (!preset) throw UsageError("unknown preset '" + a.preset + "'");
    global = setup_global(*preset);
  } else {
    if (a.rho.empty() || a.g.empty() || a.factors.empty() || a.seed.empty()) {
      throw UsageError("custom setup needs --rho, --g, --factors and --seed");
    }
    CustomGroup custom{BigNat::from_hex(a.rho), BigNat::from_hex(a.g), {},
                       a.seed};
    for (const std::string& f : a.factors) {
      custom.factors.push_back(BigNat::from_hex(f));
    }
    global = setup_global(custom);
  }
  save(a.out, *global);
  return kExitOk;
}

struct KeygenArgs {
  std::string global, out_public, out_secret;
  std::uint32_t t = 4;
  std::uint64_t seed = 0;
};

int run_escrow_keygen(const KeygenArgs& a) {
  const auto global = load<GlobalParams>(a.global);
  SeededRng rng = SeededRng::substream(a.seed, "escrow", 0, 0);
  const EscrowKeys keys = gen_escrow_keys(global, a.t, rng);
  save(a.out_public, keys.params);
  save(a.out_secret, keys.secret);
  return kExitOk;
}

int run_keygen(const KeygenArgs& a) {
  const auto global = load<GlobalParams>(a.global);
  SeededRng rng = SeededRng::substream(a.seed, "recipient", 0, 0);
  const RecipientKeypair keys = gen_recipient_keys(global, rng);
  save(a.out_public, keys.public_key());
  save(a.out_secret, keys);
  return kExitOk;
}

int run_verify_params(const std::string& global_path,
                      const std::string& params_path) {
  const auto global = load<GlobalParams>(global_path);
  const auto params = load<EscrowParams>(params_path);
  bool ok = false;
  try {
    ok = verify_escrow_params(global, params);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kOutOfGroup) throw;
  }
  std::cout << (ok ? "well-formed" : "MALFORMED") << ": t=" << params.t()
            << " epoch=" << params.epoch << "\n";
  return ok ? kExitOk : kExitInvalid;
}

struct EncryptArgs {
  std::string global, recipient, params, s, k, vhat, out;
  std::uint32_t i = 0;
  std::optional<std::uint64_t> seed;
  bool forge = false;
};

int run_encrypt(const EncryptArgs& a, bool malformed) {
  const auto global = load<GlobalParams>(a.global);
  const auto recipient = load<RecipientPublicKey>(a.recipient);
  require_same_group(global, recipient.y.modulus(), "recipient key");
  const GroupElement s = session_key(global, a.s);

  std::optional<SeededRng> rng;
  if (a.seed) rng = SeededRng::substream(*a.seed, "cli-encrypt", 0, 0);
  BigNat k;
  if (!a.k.empty()) {
    k = BigNat::from_hex(a.k);
  } else if (rng) {
    k = uniform_in(*rng, BigNat(1), global.rho - BigNat(2));
  } else {
    throw UsageError("give --k or --seed");
  }

  std::optional<EscrowParams> params;
  if (!a.params.empty()) params = load<EscrowParams>(a.params);

  Ciphertext ct = [&] {
    if (!malformed) {
      if (!params) throw UsageError("encrypt needs --params");
      if (!verify_escrow_params(global, *params)) {
        throw Error(ErrorCode::kValidationError,
                    "escrow chain is not well-formed; refusing to encrypt");
      }
      return encrypt(global, recipient.y, *params, a.i, s, k);
    }
    if (a.forge) {
      if (!params || !rng) throw UsageError("--forge needs --params and --seed");
      const OfflistParameter forged =
          forge_offlist_parameter(global, *params, *rng);
      return encrypt_malformed(global, recipient.y, forged.v_hat, a.i, s, k);
    }
    if (a.vhat.empty()) throw UsageError("give --vhat or --forge");
    const GroupElement v_hat(BigNat::from_hex(a.vhat), global.rho);
    return encrypt_malformed(global, recipient.y, v_hat, a.i, s, k);
  }();
  save(a.out, ct);
  return kExitOk;
}

int run_decrypt(const std::string& global_path, const std::string& secret_path,
                const std::string& ct_path) {
  const auto global = load<GlobalParams>(global_path);
  const auto keys = load<RecipientKeypair>(secret_path);
  require_same_group(global, keys.y.modulus(), "recipient secret");
  if (!(recipient_keys_from_secret(global, keys.x) == keys)) {
    throw Error(ErrorCode::kValidationError, "y_B does not match x_B");
  }
  const auto ct = load<Ciphertext>(ct_path);
  std::cout << decrypt_recipient(global, keys.x, ct).residue().to_hex()
            << "\n";
  return kExitOk;
}

int run_escrow_decrypt(const std::string& global_path,
                       const std::string& secret_path,
                       const std::string& ct_path, bool force) {
  const auto global = load<GlobalParams>(global_path);
  const auto secret = load<EscrowSecret>(secret_path);
  require_same_group(global, secret.rho, "escrow secret");
  const auto ct = load<Ciphertext>(ct_path);
  const EscrowAttempt attempt = decrypt_escrow(global, secret, ct, force);
  if (attempt.candidate) {
    std::cout << attempt.candidate->residue().to_hex() << "\n";
  } else {
    std::cout << "not-attempted\n";
  }
  return kExitOk;
}

struct SimulateArgs {
  std::string preset = "test64", strategy = "honest", index = "uniform";
  std::string out_csv;
  std::uint32_t t = 4, epochs = 1;
  std::uint64_t sessions = 1000, seed = 0;
  std::optional<std::uint64_t> disclosure_at;
};

SenderStrategy parse_strategy(const SimulateArgs& a) {
  if (a.strategy == "honest") return SenderStrategy::honest();
  if (a.strategy == "evading") return SenderStrategy::evading();
  if (a.strategy != "malformed") {
    throw UsageError("unknown strategy '" + a.strategy + "'");
  }
  if (a.index == "uniform") return SenderStrategy::malformed();
  if (a.index == "good") {
    return SenderStrategy::malformed(IndexPolicy::kGoodKey);
  }
  try {
    std::size_t used = 0;
    const unsigned long i = std::stoul(a.index, &used);
    if (used == a.index.size()) {
      return SenderStrategy::malformed(IndexPolicy::kFixed,
                                       static_cast<std::uint32_t>(i));
    }
  } catch (const std::exception&) {
  }
  throw UsageError("--index must be uniform, good or a number");
}

int run_simulate(const SimulateArgs& a) {
  const auto preset = parse_preset(a.preset);
  if (!preset) throw UsageError("unknown preset '" + a.preset + "'");
  SimConfig config;
  config.preset = *preset;
  config.t = a.t;
  config.sessions = a.sessions;
  config.epochs = a.epochs;
  config.disclosure_at = a.disclosure_at;
  config.strategy = parse_strategy(a);
  config.seed = a.seed;
  try {
    validate_config(config);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const SimReport report = run_simulation(config);
  if (a.out_csv == "-") {
    std::cout << emit_report_csv(report);
  } else {
    emit_report_csv(report, a.out_csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translucent key-escrow toolkit and wiretap simulator"};
  app.require_subcommand(1);

  SetupArgs setup;
  auto* setup_cmd = app.add_subcommand("setup", "Create global group parameters");
  auto* preset_opt = setup_cmd->add_option("--preset", setup.preset,
                                           "toy23, test64 or demo512");
  setup_cmd->add_option("--rho", setup.rho, "Prime modulus (hex)")
      ->excludes(preset_opt);
  setup_cmd->add_option("--g", setup.g, "Generator (hex)")->excludes(preset_opt);
  setup_cmd->add_option("--factors", setup.factors,
                        "Distinct prime factors of rho-1 (hex, comma separated)")
      ->delimiter(',')
      ->excludes(preset_opt);
  setup_cmd->add_option("--seed", setup.seed, "Seed string for U")
      ->excludes(preset_opt);
  setup_cmd->add_option("--out", setup.out)->required();

  KeygenArgs escrow_keygen;
  auto* escrow_keygen_cmd =
      app.add_subcommand("escrow-keygen", "Generate Larry's chain and trapdoor");
  escrow_keygen_cmd->add_option("--global", escrow_keygen.global)->required();
  escrow_keygen_cmd->add_option("--t", escrow_keygen.t)->required();
  escrow_keygen_cmd->add_option("--seed", escrow_keygen.seed)->required();
  escrow_keygen_cmd->add_option("--out-public", escrow_keygen.out_public)
      ->required();
  escrow_keygen_cmd->add_option("--out-secret", escrow_keygen.out_secret)
      ->required();

  std::string verify_global, verify_params;
  auto* verify_cmd = app.add_subcommand(
      "verify-params", "Check a published chain (no secrets needed)");
  verify_cmd->add_option("--global", verify_global)->required();
  verify_cmd->add_option("--params", verify_params)->required();

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Generate a recipient key pair");
  keygen_cmd->add_option("--global", keygen.global)->required();
  keygen_cmd->add_option("--seed", keygen.seed)->required();
  keygen_cmd->add_option("--out-public", keygen.out_public)->required();
  keygen_cmd->add_option("--out-secret", keygen.out_secret)->required();

  EncryptArgs enc, mal;
  auto add_encrypt_options = [](CLI::App* cmd, EncryptArgs& a) {
    cmd->add_option("--global", a.global)->required();
    cmd->add_option("--recipient", a.recipient)->required();
    cmd->add_option("--params", a.params);
    cmd->add_option("--i", a.i)->required();
    cmd->add_option("--s", a.s, "Session key (hex)")->required();
    cmd->add_option("--k", a.k, "Nonce (hex); drawn from --seed if omitted");
    cmd->add_option("--seed", a.seed);
    cmd->add_option("--out", a.out)->required();
  };
  auto* encrypt_cmd = app.add_subcommand("encrypt", "Honest encryption");
  add_encrypt_options(encrypt_cmd, enc);
  auto* malformed_cmd = app.add_subcommand(
      "encrypt-malformed", "Encrypt with an off-list third component");
  add_encrypt_options(malformed_cmd, mal);
  auto* vhat_opt = malformed_cmd->add_option("--vhat", mal.vhat, "Element (hex)");
  malformed_cmd->add_flag("--forge", mal.forge, "Draw an off-list element")
      ->excludes(vhat_opt);

  std::string dec_global, dec_secret, dec_ct;
  auto* decrypt_cmd = app.add_subcommand("decrypt", "Recipient decryption");
  decrypt_cmd->add_option("--global", dec_global)->required();
  decrypt_cmd->add_option("--secret", dec_secret)->required();
  decrypt_cmd->add_option("--ct", dec_ct)->required();

  std::string edec_global, edec_secret, edec_ct;
  bool edec_force = false;
  auto* escrow_decrypt_cmd =
      app.add_subcommand("escrow-decrypt", "Larry's decryption attempt");
  escrow_decrypt_cmd->add_option("--global", edec_global)->required();
  escrow_decrypt_cmd->add_option("--escrow-secret", edec_secret)->required();
  escrow_decrypt_cmd->add_option("--ct", edec_ct)->required();
  escrow_decrypt_cmd->add_flag("--force", edec_force,
                               "Attempt even when i differs from ell");

  SimulateArgs sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run the wiretap simulation, write CSV");
  simulate_cmd->add_option("--preset", sim.preset)->capture_default_str();
  simulate_cmd->add_option("--t", sim.t)->capture_default_str();
  simulate_cmd->add_option("--sessions", sim.sessions)->capture_default_str();
  simulate_cmd->add_option("--epochs", sim.epochs)->capture_default_str();
  simulate_cmd->add_option("--strategy", sim.strategy,
                           "honest, malformed or evading")
      ->capture_default_str();
  simulate_cmd->add_option("--index", sim.index,
                           "Malformed index policy: uniform, good or N")
      ->capture_default_str();
  simulate_cmd->add_option("--disclosure-at", sim.disclosure_at);
  simulate_cmd->add_option("--seed", sim.seed)->capture_default_str();
  simulate_cmd->add_option("--out-csv", sim.out_csv, "File, or - for stdout")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*setup_cmd) return run_setup(setup);
    if (*escrow_keygen_cmd) return run_escrow_keygen(escrow_keygen);
    if (*verify_cmd) return run_verify_params(verify_global, verify_params);
    if (*keygen_cmd) return run_keygen(keygen);
    if (*encrypt_cmd) return run_encrypt(enc, false);
    if (*malformed_cmd) return run_encrypt(mal, true);
    if (*decrypt_cmd) return run_decrypt(dec_global, dec_secret, dec_ct);
    if (*escrow_decrypt_cmd) {
      return run_escrow_decrypt(edec_global, edec_secret, edec_ct, edec_force);
    }
    if (*simulate_cmd) return run_simulate(sim);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kIoError ? kExitUsage : kExitInvalid;
  }
  return kExitUsage;
}
