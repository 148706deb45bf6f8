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
#include "pvi/board/bulletin.hpp"

#include <sstream>

#include "pvi/common/errors.hpp"

namespace pvi::board {

std::string_view tag(PayloadKind kind) {
  switch (kind) {
    case PayloadKind::kAuctionDetails: return "auction_details";
    case PayloadKind::kCommitment: return "commitment";
    case PayloadKind::kPlatformCommitment: return "platform_commitment";
    case PayloadKind::kListAppend: return "list_append";
    case PayloadKind::kOutcomeRecord: return "outcome_record";
    case PayloadKind::kOrderingToken: return "ordering_token";
    case PayloadKind::kKeyRelease: return "key_release";
  }
  return "unknown";
}

crypto::Digest BulletinEntry::payload_digest() const {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(payload.kind)).str(payload.list_id).bytes(payload.body);
  return crypto::sha256(w.data());
}

Bytes signing_bytes(std::uint64_t sequence_no, std::int64_t logical_time, const PartyId& author,
                    const Payload& payload) {
  ByteWriter w;
  w.str("pvi.board")
      .u64(sequence_no)
      .u64(static_cast<std::uint64_t>(logical_time))
      .str(author)
      .u8(static_cast<std::uint8_t>(payload.kind))
      .str(payload.list_id)
      .bytes(payload.body);
  return std::move(w).take();
}

void BulletinBoard::register_author(const PartyId& author, const mpz_class& public_key) {
  if (!group_.contains(public_key)) throw DomainError("author key outside the group");
  keys_[author] = public_key;
}

std::optional<std::uint64_t> BulletinBoard::post(const PartyId& author, std::int64_t logical_time,
                                                  Payload payload,
                                                  const crypto::SchnorrSignature& signature) {
  std::uint64_t seq = next_sequence();
  auto key = keys_.find(author);
  if (key == keys_.end()) {
    rejections_.push_back("seq " + std::to_string(seq) + ": unregistered author " + author);
    return std::nullopt;
  }
  if (!crypto::schnorr_verify(group_, key->second,
                              signing_bytes(seq, logical_time, author, payload), signature)) {
    rejections_.push_back("seq " + std::to_string(seq) + ": bad signature from " + author);
    return std::nullopt;
  }
  if (!payload.list_id.empty()) {
    DynamicList& list = lists_[payload.list_id];
    list.id = payload.list_id;
    list.entries.push_back(seq);
  }
  payload_bytes_ += payload.body.size();
  entries_.push_back({seq, logical_time, author, std::move(payload), signature});
  return seq;
}

std::optional<std::uint64_t> BulletinBoard::sign_and_post(const PartyId& author,
                                                          const crypto::SigningKey& key,
                                                          std::int64_t logical_time,
                                                          Payload payload, Rng& rng) {
  auto sig = crypto::schnorr_sign(group_, key,
                                  signing_bytes(next_sequence(), logical_time, author, payload), rng);
  return post(author, logical_time, std::move(payload), sig);
}

std::vector<BulletinEntry> BulletinBoard::read_range(std::uint64_t from_seq,
                                                     std::uint64_t to_seq) const {
  std::vector<BulletinEntry> out;
  if (from_seq == 0) from_seq = 1;
  for (std::uint64_t s = from_seq; s <= to_seq && s <= entries_.size(); ++s)
    out.push_back(entries_[s - 1]);
  return out;
}

const BulletinEntry* BulletinBoard::entry(std::uint64_t seq) const {
  if (seq == 0 || seq > entries_.size()) return nullptr;
  return &entries_[seq - 1];
}

DynamicList BulletinBoard::read_list(const std::string& list_id) const {
  auto it = lists_.find(list_id);
  if (it == lists_.end()) return {list_id, {}};
  return it->second;
}

std::vector<std::string> BulletinBoard::list_ids() const {
  std::vector<std::string> out;
  for (const auto& [id, list] : lists_) out.push_back(id);
  return out;
}

const BulletinEntry* BulletinBoard::first_of(PayloadKind kind, const PartyId& author) const {
  for (const BulletinEntry& e : entries_)
    if (e.payload.kind == kind && e.author == author) return &e;
  return nullptr;
}

std::vector<const BulletinEntry*> BulletinBoard::of_kind(PayloadKind kind) const {
  std::vector<const BulletinEntry*> out;
  for (const BulletinEntry& e : entries_)
    if (e.payload.kind == kind) out.push_back(&e);
  return out;
}

std::vector<std::pair<std::uint64_t, crypto::Digest>> BulletinBoard::snapshot() const {
  std::vector<std::pair<std::uint64_t, crypto::Digest>> out;
  out.reserve(entries_.size());
  for (const BulletinEntry& e : entries_) out.emplace_back(e.sequence_no, e.payload_digest());
  return out;
}

bool BulletinBoard::replay_verify() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const BulletinEntry& e = entries_[i];
    if (e.sequence_no != i + 1) return false;
    auto key = keys_.find(e.author);
    if (key == keys_.end()) return false;
    if (!crypto::schnorr_verify(group_, key->second,
                                signing_bytes(e.sequence_no, e.logical_time, e.author, e.payload),
                                e.signature))
      return false;
  }
  return true;
}

std::string BulletinBoard::dump() const {
  std::ostringstream out;
  for (const BulletinEntry& e : entries_) {
    crypto::Digest d = e.payload_digest();
    out << e.sequence_no << ',' << e.logical_time << ',' << e.author << ',' << tag(e.payload.kind)
        << ',' << to_hex(d) << ',' << to_hex(e.signature.serialize(group_)) << '\n';
  }
  return out.str();
}

std::string winner_list(std::uint32_t user) { return "lw/" + std::to_string(user); }
std::string platform_winner_list() { return "lw/platform"; }
std::string payment_list(std::uint32_t user, std::uint32_t winner) {
  return "lp/" + std::to_string(user) + "/" + std::to_string(winner);
}
std::string winner_state_list(std::uint32_t winner) { return "ls/" + std::to_string(winner); }

}  // namespace pvi::board
