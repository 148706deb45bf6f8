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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvi/common/bytes.hpp"
#include "pvi/crypto/hash.hpp"
#include "pvi/mech/profile.hpp"
#include "pvi/protocol/bus.hpp"

namespace pvi::protocol {

enum class Field : std::uint8_t {
  kCiphertext,       // opaque, never a plaintext
  kCommitment,       // opaque
  kCode,             // order-preserving code
  kBid,              // plaintext bid
  kLimit,            // plaintext limit
  kAssignments,      // plaintext assignment set
  kSetUnionElement,  // one element learned through set union
  kMarginal,         // own marginal utility
  kUtility,          // platform-side coverage count
  kOrdering,         // comparison token
  kPayment,
  kAllocation,
  kWinnerNotice,
  kReferencedNotice,
  kDecommitment,  // a value recovered by opening a time-lapse commitment
  kRandomness,
  kKey,
  kReceipt,
};

std::string_view field_name(Field field);

struct Observation {
  std::int64_t round = 0;
  Field field = Field::kCiphertext;
  std::optional<mech::UserId> subject;
  std::string value;
  crypto::Digest digest{};
};

class PartyView {
 public:
  PartyView() = default;
  explicit PartyView(PartyId party) : party_(std::move(party)) {}

  const PartyId& party() const { return party_; }
  void record(std::int64_t round, Field field, std::optional<mech::UserId> subject,
              std::string value);
  void record_bytes(std::int64_t round, Field field, std::optional<mech::UserId> subject,
                    std::span<const std::uint8_t> data);
  const std::vector<Observation>& observations() const { return observations_; }
  std::vector<const Observation*> of_field(Field field) const;

 private:
  PartyId party_;
  std::vector<Observation> observations_;
};

}  // namespace pvi::protocol
