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

#include "translucent/wiretap_sim.hpp"

#include <charconv>
#include <string>

#include "translucent/error.hpp"

namespace translucent {
namespace {

void config_error(const std::string& why) {
  throw Error(ErrorCode::kConfigInvalid, why);
}

std::uint32_t draw_index(const SessionContext& context,
                         const SenderStrategy& strategy, RandomSource& rng) {
  const std::uint32_t t = context.escrow.params.t();
  switch (strategy.kind) {
    case StrategyKind::kHonestUniform:
      break;
    case StrategyKind::kEvading:
      if (context.known_ell) {
        return choose_evading_index(t, *context.known_ell, rng);
      }
      break;
    case StrategyKind::kMalformed:
      if (strategy.index_policy == IndexPolicy::kFixed) {
        return strategy.fixed_index;
      }
      if (strategy.index_policy == IndexPolicy::kGoodKey) {
        return context.escrow.secret.ell;
      }
      break;
  }
  return static_cast<std::uint32_t>(uniform_u64_in(rng, 1, t));
}

std::string format_rate(double rate) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), rate);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return out;
}

double ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

void validate_config(const SimConfig& config) {
  if (config.t == 0) config_error("t must be >= 1");
  if (config.sessions == 0) config_error("sessions must be >= 1");
  if (config.epochs == 0) config_error("epochs must be >= 1");
  if (config.disclosure_at &&
      (*config.disclosure_at == 0 || *config.disclosure_at > config.sessions)) {
    config_error("disclosure point must lie in [1, sessions]");
  }
  const SenderStrategy& s = config.strategy;
  if (s.kind == StrategyKind::kEvading && config.t < 2) {
    config_error("evasion needs at least two keys");
  }
  if (s.kind == StrategyKind::kMalformed &&
      s.index_policy == IndexPolicy::kFixed &&
      (s.fixed_index == 0 || s.fixed_index > config.t)) {
    config_error("fixed index must lie in [1, t]");
  }
}

SessionRecord run_session(const SessionContext& context,
                          const SenderStrategy& strategy, RandomSource& rng) {
  const GlobalParams& global = context.global;
  const std::uint32_t i = draw_index(context, strategy, rng);
  GroupElement s(uniform_in(rng, BigNat(1), global.rho - BigNat(1)),
                 global.rho);
  const BigNat k = uniform_in(rng, BigNat(1), global.rho - BigNat(2));

  const bool honest = strategy.kind != StrategyKind::kMalformed;
  Ciphertext ct = [&] {
    if (honest) {
      return encrypt(global, context.recipient.y, context.escrow.params, i, s,
                     k);
    }
    const OfflistParameter forged =
        forge_offlist_parameter(global, context.escrow.params, rng);
    return encrypt_malformed(global, context.recipient.y, forged.v_hat, i, s,
                             k);
  }();

  const GroupElement bob = decrypt_recipient(global, context.recipient.x, ct);
  EscrowAttempt larry = decrypt_escrow(global, context.escrow.secret, ct);

  SessionRecord record{.epoch = context.epoch,
                       .session = context.session,
                       .index_used = i,
                       .honest = honest,
                       .s_true = s,
                       .bob_recovered = bob == s,
                       .escrow_attempted = larry.attempted(),
                       .escrow_candidate = std::move(larry.candidate),
                       .escrow_correct = false};
  record.escrow_correct =
      record.escrow_candidate && *record.escrow_candidate == s;
  return record;
}

EpochTally tally_sessions(std::span<const SessionRecord> records) {
  EpochTally out;
  for (const SessionRecord& r : records) {
    ++out.sessions;
    out.attempted += r.escrow_attempted ? 1 : 0;
    out.correct += r.escrow_correct ? 1 : 0;
    out.bob_recovered += r.bob_recovered ? 1 : 0;
  }
  return out;
}

double EpochReport::believed_rate() const {
  return ratio(tally.attempted, tally.sessions);
}

double EpochReport::actual_rate() const {
  return ratio(tally.correct, tally.sessions);
}

SimReport run_simulation(const SimConfig& config) {
  validate_config(config);
  return run_simulation(config, setup_global(config.preset));
}

SimReport run_simulation(const SimConfig& config, const GlobalParams& global) {
  validate_config(config);
  SeededRng recipient_rng =
      SeededRng::substream(config.seed, "recipient", 0, 0);
  const RecipientKeypair recipient = gen_recipient_keys(global, recipient_rng);

  SimReport report{config, {}};
  report.epochs.reserve(config.epochs);
  for (std::uint64_t epoch = 0; epoch < config.epochs; ++epoch) {
    SeededRng key_rng = SeededRng::substream(config.seed, "escrow", epoch, 0);
    const EscrowKeys escrow =
        epoch == 0 ? gen_escrow_keys(global, config.t, key_rng)
                   : rotate_escrow_keys(global, config.t, key_rng, epoch - 1);

    EpochReport out;
    out.epoch = epoch;
    out.true_ell = escrow.secret.ell;
    out.records.reserve(config.sessions);

    // Knowledge of ell never outlives the epoch it was inferred in.
    std::optional<std::uint32_t> known_ell;
    for (std::uint64_t n = 1; n <= config.sessions; ++n) {
      SeededRng rng = SeededRng::substream(config.seed, "session", epoch, n);
      const SessionContext context{global, recipient, escrow, epoch, n,
                                   known_ell};
      out.records.push_back(run_session(context, config.strategy, rng));

      if (epoch == 0 && config.disclosure_at && *config.disclosure_at == n) {
        std::vector<RevealedRecord> revealed;
        revealed.reserve(out.records.size());
        for (const SessionRecord& r : out.records) {
          revealed.push_back({r.index_used, r.escrow_correct});
        }
        const IndexInference inference = infer_escrow_index(revealed);
        if (inference.ell_hat) {
          out.inference = InferenceEvent{n, *inference.ell_hat};
          if (config.strategy.kind == StrategyKind::kEvading) {
            known_ell = inference.ell_hat;
          }
        }
      }
    }
    out.tally = tally_sessions(out.records);
    report.epochs.push_back(std::move(out));
  }
  return report;
}

std::vector<SummaryRow> summarize(const SimReport& report) {
  std::vector<SummaryRow> rows;
  rows.reserve(report.epochs.size());
  for (const EpochReport& e : report.epochs) {
    rows.push_back(SummaryRow{
        e.epoch, e.tally.sessions, e.tally.attempted, e.tally.correct,
        e.believed_rate(), e.actual_rate(),
        e.inference ? std::optional<std::uint32_t>(e.inference->ell_hat)
                    : std::nullopt});
  }
  return rows;
}

std::string format_summary_row(const SummaryRow& row) {
  std::string out = std::to_string(row.epoch) + "," +
                    std::to_string(row.sessions) + "," +
                    std::to_string(row.attempted) + "," +
                    std::to_string(row.correct) + "," +
                    format_rate(row.believed_rate) + "," +
                    format_rate(row.actual_rate) + ",";
  if (row.inferred_index) out += std::to_string(*row.inferred_index);
  return out;
}

}  // namespace translucent
