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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"
#include "pvi/crypto/hash.hpp"
#include "pvi/crypto/schnorr.hpp"

namespace pvi::board {

using PartyId = std::string;

enum class PayloadKind : std::uint8_t {
  kAuctionDetails = 1,
  kCommitment,
  kPlatformCommitment,
  kListAppend,
  kOutcomeRecord,
  kOrderingToken,
  kKeyRelease,
};

std::string_view tag(PayloadKind kind);

struct Payload {
  PayloadKind kind = PayloadKind::kAuctionDetails;
  std::string list_id;  // dynamic list this entry belongs to, if any
  Bytes body;

  bool operator==(const Payload&) const = default;
};

struct BulletinEntry {
  std::uint64_t sequence_no = 0;
  std::int64_t logical_time = 0;
  PartyId author;
  Payload payload;
  crypto::SchnorrSignature signature;

  crypto::Digest payload_digest() const;
};

struct DynamicList {
  std::string id;
  std::vector<std::uint64_t> entries;  // sequence numbers, append order
};

// Canonical bytes covered by an entry signature.
Bytes signing_bytes(std::uint64_t sequence_no, std::int64_t logical_time, const PartyId& author,
                    const Payload& payload);

// Append-only, signed, publicly readable log. Sequence numbers start at 1.
class BulletinBoard {
 public:
  explicit BulletinBoard(const crypto::GroupParams& group) : group_(group) {}

  void register_author(const PartyId& author, const mpz_class& public_key);
  bool is_registered(const PartyId& author) const { return keys_.contains(author); }

  std::uint64_t next_sequence() const { return entries_.size() + 1; }
  std::size_t size() const { return entries_.size(); }
  std::size_t payload_bytes() const { return payload_bytes_; }

  // Returns the new sequence number, or nullopt (logged) when the signature
  // does not verify under the author's registered key.
  std::optional<std::uint64_t> post(const PartyId& author, std::int64_t logical_time,
                                    Payload payload, const crypto::SchnorrSignature& signature);
  // Signs for the next sequence number and posts.
  std::optional<std::uint64_t> sign_and_post(const PartyId& author, const crypto::SigningKey& key,
                                             std::int64_t logical_time, Payload payload, Rng& rng);

  const std::vector<std::string>& rejections() const { return rejections_; }

  // Inclusive range; out-of-range parts are dropped.
  std::vector<BulletinEntry> read_range(std::uint64_t from_seq, std::uint64_t to_seq) const;
  const std::vector<BulletinEntry>& entries() const { return entries_; }
  const BulletinEntry* entry(std::uint64_t seq) const;
  DynamicList read_list(const std::string& list_id) const;
  std::vector<std::string> list_ids() const;
  // First entry of the given kind by the author; later duplicates are kept
  // for audit but ignored.
  const BulletinEntry* first_of(PayloadKind kind, const PartyId& author) const;
  std::vector<const BulletinEntry*> of_kind(PayloadKind kind) const;

  // (sequence_no, payload digest) pairs.
  std::vector<std::pair<std::uint64_t, crypto::Digest>> snapshot() const;
  // Re-checks every signature and sequence number; false on any mismatch.
  bool replay_verify() const;
  // One line per entry: seq,time,author,tag,digest,signature.
  std::string dump() const;

  BulletinEntry& mutable_entry_for_testing(std::uint64_t seq) { return entries_.at(seq - 1); }

 private:
  const crypto::GroupParams& group_;
  std::map<PartyId, mpz_class> keys_;
  std::vector<BulletinEntry> entries_;
  std::map<std::string, DynamicList> lists_;
  std::vector<std::string> rejections_;
  std::size_t payload_bytes_ = 0;
};

// List naming for the submodular protocol.
std::string winner_list(std::uint32_t user);
std::string platform_winner_list();
std::string payment_list(std::uint32_t user, std::uint32_t winner);
std::string winner_state_list(std::uint32_t winner);

}  // namespace pvi::board
