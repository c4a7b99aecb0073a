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

#ifndef TRANSLUCENT_WIRETAP_SIM_HPP_
#define TRANSLUCENT_WIRETAP_SIM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "translucent/adversary.hpp"
#include "translucent/escrow_params.hpp"
#include "translucent/protocol.hpp"
#include "translucent/rng.hpp"

namespace translucent {

enum class StrategyKind { kHonestUniform, kMalformed, kEvading };

// How a malformed sender picks the index it advertises. kGoodKey hands the
// sender the true ell (a worst case for Larry, used to force i = ell).
enum class IndexPolicy { kUniform, kFixed, kGoodKey };

struct SenderStrategy {
  StrategyKind kind = StrategyKind::kHonestUniform;
  IndexPolicy index_policy = IndexPolicy::kUniform;
  std::uint32_t fixed_index = 0;

  static SenderStrategy honest() { return {}; }
  static SenderStrategy malformed(IndexPolicy policy = IndexPolicy::kUniform,
                                  std::uint32_t fixed_index = 0) {
    return {StrategyKind::kMalformed, policy, fixed_index};
  }
  // Honest-uniform until a disclosure yields ell, then avoids it.
  static SenderStrategy evading() {
    return {StrategyKind::kEvading, IndexPolicy::kUniform, 0};
  }
};

struct SimConfig {
  Preset preset = Preset::kTest64;
  std::uint32_t t = 4;
  std::uint64_t sessions = 1000;  // per epoch
  std::uint32_t epochs = 1;
  // One disclosure (court case) after this 1-based session of epoch 0.
  std::optional<std::uint64_t> disclosure_at;
  SenderStrategy strategy;
  std::uint64_t seed = 0;
};

// Throws Error(kConfigInvalid).
void validate_config(const SimConfig& config);

// Ground truth for one Alice -> Bob transmission. escrow_correct compares
// Larry's candidate with s_true, which Larry himself cannot do.
struct SessionRecord {
  std::uint64_t epoch = 0;
  std::uint64_t session = 0;
  std::uint32_t index_used = 0;
  bool honest = true;
  GroupElement s_true;
  bool bob_recovered = false;
  bool escrow_attempted = false;
  std::optional<GroupElement> escrow_candidate;
  bool escrow_correct = false;
};

struct SessionContext {
  const GlobalParams& global;
  const RecipientKeypair& recipient;
  const EscrowKeys& escrow;
  std::uint64_t epoch = 0;
  std::uint64_t session = 0;
  // Set once the sender has inferred ell in this epoch.
  std::optional<std::uint32_t> known_ell;
};

// Draws, in order: the index (per strategy), s in [1, rho - 1], k in
// [1, rho - 2], and for malformed senders the off-list element.
SessionRecord run_session(const SessionContext& context,
                          const SenderStrategy& strategy, RandomSource& rng);

struct EpochTally {
  std::uint64_t sessions = 0;
  std::uint64_t attempted = 0;
  std::uint64_t correct = 0;
  std::uint64_t bob_recovered = 0;

  friend bool operator==(const EpochTally&, const EpochTally&) = default;
};

EpochTally tally_sessions(std::span<const SessionRecord> records);

struct InferenceEvent {
  std::uint64_t after_session = 0;
  std::uint32_t ell_hat = 0;
};

struct EpochReport {
  std::uint64_t epoch = 0;
  std::uint32_t true_ell = 0;
  EpochTally tally;
  std::optional<InferenceEvent> inference;
  std::vector<SessionRecord> records;

  double believed_rate() const;
  double actual_rate() const;
};

struct SimReport {
  SimConfig config;
  std::vector<EpochReport> epochs;
};

// Epoch e uses escrow keys from substream (seed, "escrow", e, 0), rotated for
// e > 0; session n of epoch e uses substream (seed, "session", e, n); Bob's
// keys come from (seed, "recipient", 0, 0).
SimReport run_simulation(const SimConfig& config);
SimReport run_simulation(const SimConfig& config, const GlobalParams& global);

struct SummaryRow {
  std::uint64_t epoch = 0;
  std::uint64_t sessions = 0;
  std::uint64_t attempted = 0;
  std::uint64_t correct = 0;
  double believed_rate = 0;
  double actual_rate = 0;
  std::optional<std::uint32_t> inferred_index;
};

std::vector<SummaryRow> summarize(const SimReport& report);

// "epoch,N,attempted,correct,believed,actual,inferred" with shortest
// round-trip rates, e.g. "0,10,10,10,1.0,1.0,".
std::string format_summary_row(const SummaryRow& row);

}  // namespace translucent

#endif  // TRANSLUCENT_WIRETAP_SIM_HPP_
