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

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pvi/board/bulletin.hpp"
#include "pvi/mech/profile.hpp"
#include "pvi/protocol/bus.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/party_view.hpp"

namespace pvi::protocol {

// Platform-side fault injection, used by tests.
struct Misbehavior {
  enum class Kind { kNone, kUnderpay, kDropCommitment, kForgeRank };
  Kind kind = Kind::kNone;
  std::optional<mech::UserId> target;  // defaults to the first winner / first user
  mpq_class delta = 1;
};

struct RunOptions {
  Misbehavior misbehavior;
  // User that never acknowledges its winner notice (submodular only).
  std::optional<mech::UserId> silent_winner;
  // Replaces the policy's alpha for the audit coin flips only.
  std::optional<mpq_class> audit_probability;
  bool run_verification = true;
};

struct VerifyResult {
  enum class Status { kConfirmed, kDiscrepancy };
  Status status = Status::kConfirmed;
  mpq_class expected;
  mpq_class observed;
  std::string reason;

  bool confirmed() const { return status == Status::kConfirmed; }
};

struct AuditRecord {
  mech::UserId user = 0;
  VerifyResult result;
};

struct RunTranscript;

// Whatever the AI retains after a run to answer audit requests.
struct RunArtifacts {
  virtual ~RunArtifacts() = default;
  virtual VerifyResult verify(mech::UserId user, const RunTranscript& transcript) const = 0;
};

struct RunTranscript {
  AuctionConfig config;
  mech::AuctionOutcome outcome;  // as computed and paid by the platform
  std::vector<mech::UserId> participants;
  Bus bus;
  std::map<PartyId, PartyView> views;
  std::shared_ptr<board::BulletinBoard> board;
  std::vector<AuditRecord> audits;
  std::vector<std::string> log;
  std::vector<mech::UserId> excluded;
  std::vector<mech::UserId> appeals_upheld;
  mpq_class fines = 0;
  // Rank (1-based) of the first candidate that failed admission, if any.
  std::optional<std::size_t> failing_rank;
  std::int64_t release_round = 0;
  double wall_seconds = 0;
  std::shared_ptr<const RunArtifacts> artifacts;

  PartyView& view(const PartyId& party);
  const PartyView& view(const PartyId& party) const;
  const std::vector<MessageRecord>& messages() const { return bus.messages(); }
  const Counters& counters() const { return bus.counters(); }
  std::size_t discrepancies() const;
};

// AI recomputation of one user's payment from board data and revealed
// randomness. Throws VerificationError when board entries are missing.
VerifyResult verify_payment(mech::UserId user, const RunTranscript& transcript);

struct PrivacyReport {
  std::size_t cross_user_leaks = 0;
  std::size_t platform_profile_leaks = 0;
  std::size_t early_decommitments = 0;
  std::size_t membership_leaks = 0;
  std::size_t identity_linked_failing_records = 0;
  // Elements of a non-winner's assignment set learned through set union.
  std::size_t set_union_disclosures = 0;
  bool commitments_uniform = true;
  std::size_t commitment_candidates = 0;
  std::vector<std::string> details;

  bool clean() const {
    return cross_user_leaks == 0 && platform_profile_leaks == 0 && early_decommitments == 0 &&
           membership_leaks == 0 && identity_linked_failing_records == 0 && commitments_uniform;
  }
};

PrivacyReport scan_privacy(const RunTranscript& transcript);

}  // namespace pvi::protocol
