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
#include "pvi/protocol/transcript.hpp"

#include <set>

#include "pvi/common/errors.hpp"

namespace pvi::protocol {

PartyView& RunTranscript::view(const PartyId& party) {
  auto it = views.find(party);
  if (it == views.end()) it = views.emplace(party, PartyView(party)).first;
  return it->second;
}

const PartyView& RunTranscript::view(const PartyId& party) const {
  static const PartyView kEmpty;
  auto it = views.find(party);
  return it == views.end() ? kEmpty : it->second;
}

std::size_t RunTranscript::discrepancies() const {
  std::size_t n = 0;
  for (const AuditRecord& a : audits) n += a.result.confirmed() ? 0 : 1;
  return n;
}

VerifyResult verify_payment(mech::UserId user, const RunTranscript& transcript) {
  if (!transcript.artifacts) throw VerificationError("run retained no verification material");
  return transcript.artifacts->verify(user, transcript);
}

namespace {

bool is_profile_field(Field f) {
  return f == Field::kBid || f == Field::kLimit || f == Field::kAssignments;
}

}  // namespace

PrivacyReport scan_privacy(const RunTranscript& t) {
  PrivacyReport r;
  std::set<mech::UserId> winners(t.outcome.winners.begin(), t.outcome.winners.end());
  auto note = [&](const PartyId& who, const Observation& o, std::string_view what) {
    r.details.push_back(std::string(what) + ": " + who + " round " + std::to_string(o.round) + " " +
                        std::string(field_name(o.field)) +
                        (o.subject ? " of user " + std::to_string(*o.subject) : ""));
  };

  for (const auto& [party, view] : t.views) {
    std::optional<mech::UserId> self;
    if (party.starts_with("user:")) self = static_cast<mech::UserId>(std::stoul(party.substr(5)));
    for (const Observation& o : view.observations()) {
      if (o.field == Field::kDecommitment && o.round < t.release_round) {
        ++r.early_decommitments;
        note(party, o, "early decommitment");
      }
      if (self) {
        bool foreign = o.subject && *o.subject != *self;
        if (foreign && (is_profile_field(o.field) || o.field == Field::kSetUnionElement ||
                        o.field == Field::kMarginal || o.field == Field::kPayment)) {
          ++r.cross_user_leaks;
          note(party, o, "cross-user leak");
        }
        if (foreign && (o.field == Field::kWinnerNotice || o.field == Field::kReferencedNotice)) {
          ++r.membership_leaks;
          note(party, o, "membership leak");
        }
      }
    }
  }

  std::size_t anonymous_bids = 0;
  for (const Observation& o : t.view(kPlatform).observations()) {
    if (o.field == Field::kSetUnionElement && o.subject && !winners.contains(*o.subject))
      ++r.set_union_disclosures;
    if (!is_profile_field(o.field)) continue;
    if (o.subject) {
      if (!winners.contains(*o.subject)) {
        ++r.platform_profile_leaks;
        note(kPlatform, o, "platform profile leak");
      }
    } else if (o.field == Field::kBid) {
      ++anonymous_bids;
    }
  }
  bool h_model = t.config.model != mech::JobModel::kSubmodular;
  std::size_t allowed = h_model && t.failing_rank ? 1 : 0;
  if (anonymous_bids > allowed) r.platform_profile_leaks += anonymous_bids - allowed;
  if (h_model && t.failing_rank && anonymous_bids == 0) {
    // The failing rank was decoded with an identity attached.
    ++r.identity_linked_failing_records;
    r.details.push_back("first failing rank decoded with an identity");
  }

  if (t.board) {
    std::optional<std::size_t> width;
    for (const board::BulletinEntry* e : t.board->of_kind(board::PayloadKind::kCommitment)) {
      ++r.commitment_candidates;
      if (!width) width = e->payload.body.size();
      if (*width != e->payload.body.size()) r.commitments_uniform = false;
    }
  }
  return r;
}

}  // namespace pvi::protocol
