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
#include "internal.hpp"

#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/hash.hpp"
#include "pvi/crypto/ot.hpp"
#include "pvi/protocol/setup.hpp"

namespace pvi::protocol::detail {

void MaskedCodebook::build(const crypto::GroupParams& group, const crypto::OrderCodebook& codebook,
                           Rng& rng) {
  book = &codebook;
  keys.clear();
  masked.clear();
  for (const mpz_class& code : codebook.codes()) {
    mpz_class key = crypto::powm(group.g, rng.nonzero_below(group.q), group.p);
    masked.push_back(crypto::mask_code(group, key, code, codebook.code_bits()));
    keys.push_back(std::move(key));
  }
}

void MaskedCodebook::serialize_into(ByteWriter& w) const {
  std::size_t width = (book->code_bits() + 7) / 8;
  w.u32(static_cast<std::uint32_t>(masked.size()));
  for (const mpz_class& m : masked) w.mpz_fixed(m, width);
}

mpz_class fetch_code(Bus& bus, const crypto::GroupParams& group, const MaskedCodebook& table,
                     std::size_t slot, const PartyId& receiver, std::int64_t round, Phase phase,
                     Rng& receiver_rng, Rng& ai_rng) {
  crypto::OtReceiverState state;
  crypto::OtQuery query = crypto::ot_query(group, slot + 1, table.keys.size(), receiver_rng, state);
  bus.op(receiver, phase, Op::kOtQuery);
  bus.send(receiver, kAi, round, phase, "ot_query", group.element_bytes());
  crypto::OtResponse response = crypto::ot_respond(group, table.keys, query, ai_rng);
  bus.op(kAi, phase, Op::kOtRespond);
  bus.send(kAi, receiver, round, phase, "ot_response", response.byte_size(group));
  mpz_class key = crypto::ot_recover(group, response, state);
  bus.op(receiver, phase, Op::kOtRecover);
  return crypto::mask_code(group, key, table.masked[slot], table.book->code_bits());
}

std::uint64_t post(RunTranscript& tr, const PartyId& author, const crypto::SigningKey& key,
                   std::int64_t time, Phase phase, board::Payload payload, Rng& rng) {
  std::size_t bytes = payload.body.size() + payload.list_id.size();
  auto seq = tr.board->sign_and_post(author, key, time, std::move(payload), rng);
  if (!seq) throw VerificationError("board rejected a post by " + author);
  tr.bus.op(author, phase, Op::kSign);
  tr.bus.op(kBoard, phase, Op::kVerify);
  tr.bus.send(author, kBoard, time, phase, "post", bytes + 2 * 32);
  return *seq;
}

void register_parties(RunTranscript& tr, const SystemSetup& setup,
                      const std::vector<mech::SensingProfile>& profiles) {
  tr.board->register_author(kPlatform, setup.platform_signing().y);
  tr.board->register_author(kAi, setup.ai_signing().y);
  tr.board->register_author(kMpep, setup.mpep_signing().y);
  for (const mech::SensingProfile& p : profiles)
    tr.board->register_author(user_party(p.user_id), setup.user_signing(p.user_id).y);
}

mpz_class receipt_message(const crypto::GroupParams& group, std::span<const std::uint8_t> commitment,
                          const std::string& tid, std::int64_t deadline) {
  ByteWriter w;
  w.str("pvi.receipt").bytes(commitment).str(tid).u64(static_cast<std::uint64_t>(deadline));
  return 1 + crypto::hash_to_int(w.data(), group.q - 1);
}

std::string fraction(const mpq_class& v) { return format_fraction(v); }

}  // namespace pvi::protocol::detail
