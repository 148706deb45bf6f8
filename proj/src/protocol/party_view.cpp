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
#include "pvi/protocol/party_view.hpp"

namespace pvi::protocol {

std::string_view field_name(Field field) {
  switch (field) {
    case Field::kCiphertext: return "ciphertext";
    case Field::kCommitment: return "commitment";
    case Field::kCode: return "code";
    case Field::kBid: return "bid";
    case Field::kLimit: return "limit";
    case Field::kAssignments: return "assignments";
    case Field::kSetUnionElement: return "set_union_element";
    case Field::kMarginal: return "marginal";
    case Field::kUtility: return "utility";
    case Field::kOrdering: return "ordering";
    case Field::kPayment: return "payment";
    case Field::kAllocation: return "allocation";
    case Field::kWinnerNotice: return "winner_notice";
    case Field::kReferencedNotice: return "referenced_notice";
    case Field::kDecommitment: return "decommitment";
    case Field::kRandomness: return "randomness";
    case Field::kKey: return "key";
    case Field::kReceipt: return "receipt";
  }
  return "unknown";
}

void PartyView::record(std::int64_t round, Field field, std::optional<mech::UserId> subject,
                       std::string value) {
  Bytes raw(value.begin(), value.end());
  observations_.push_back({round, field, subject, std::move(value), crypto::sha256(raw)});
}

void PartyView::record_bytes(std::int64_t round, Field field, std::optional<mech::UserId> subject,
                             std::span<const std::uint8_t> data) {
  observations_.push_back({round, field, subject, {}, crypto::sha256(data)});
}

std::vector<const Observation*> PartyView::of_field(Field field) const {
  std::vector<const Observation*> out;
  for (const Observation& o : observations_)
    if (o.field == field) out.push_back(&o);
  return out;
}

}  // namespace pvi::protocol
