// Copyright 2026 The PVI Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pvi/mech/profile.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/game.hpp"
#include "pvi/protocol/setup.hpp"
#include "pvi/protocol/transcript.hpp"

namespace pvi::harness {

struct CampaignSpec {
  mech::JobModel model = mech::JobModel::kHomogeneous;
  std::size_t instances = 0;
  std::size_t max_users = 1;   // n drawn uniformly from [1, max_users]
  std::size_t max_ground = 0;  // m drawn uniformly from [1, max_ground]
  std::vector<mpq_class> bids;
  std::vector<mpq_class> limits{1};
  mpq_class inclusion{2, 5};
  std::optional<mpq_class> budget;  // random per instance when absent
  std::uint64_t seed = 1;
};

struct Instance {
  std::size_t id = 0;
  protocol::AuctionConfig config;
  std::vector<mech::SensingProfile> profiles;
};

// Deterministic in (spec.seed, id).
Instance make_instance(const CampaignSpec& spec, std::size_t id);

// Budget feasibility and individual rationality of an outcome.
std::vector<std::string> outcome_violations(const std::vector<mech::SensingProfile>& profiles,
                                            const mech::AuctionOutcome& outcome,
                                            const mpq_class& budget);

struct EquivalenceReport {
  std::size_t instances = 0;
  std::size_t matches = 0;
  std::size_t property_violations = 0;
  std::size_t privacy_clean = 0;
  std::size_t set_union_disclosures = 0;
  std::size_t audits = 0;
  std::size_t discrepancies = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool passed() const {
    return matches == instances && property_violations == 0 && privacy_clean == instances &&
           discrepancies == 0;
  }
};

using TranscriptHook = std::function<void(const Instance&, const protocol::RunTranscript&)>;

// Runs every instance through the protocol and the plaintext mechanism.
EquivalenceReport cmd_equivalence(const protocol::SystemSetup& setup, const CampaignSpec& spec,
                                  const TranscriptHook& hook = {});

struct TruthfulnessReport {
  std::size_t instances = 0;
  std::size_t deviations = 0;
  std::size_t profitable = 0;
  std::size_t property_violations = 0;
  std::vector<std::string> counterexamples;

  bool passed() const { return profitable == 0 && property_violations == 0; }
};

// Exhaustive unilateral bid deviations over the bid domain, on the plaintext
// mechanism.
TruthfulnessReport cmd_truthfulness(const CampaignSpec& spec);

struct GameRow {
  protocol::VerificationPolicy policy;
  mpq_class cheat_gain;
  mpq_class closed_form;
  protocol::GameEstimate estimate;

  // Mean within 3 standard errors of a nonpositive value.
  bool deterred() const { return estimate.mean <= 3 * estimate.std_error; }
};

std::vector<GameRow> cmd_verification_game(const std::vector<protocol::VerificationPolicy>& grid,
                                           const mpq_class& cheat_gain, std::size_t trials,
                                           std::uint64_t seed);

// alpha,fine,p_max,cheat_gain,closed_form,mean,std_error,trials
std::string game_csv(const std::vector<GameRow>& rows);

}  // namespace pvi::harness
