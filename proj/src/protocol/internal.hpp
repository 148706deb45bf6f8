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
#include <vector>

#include "pvi/board/bulletin.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"
#include "pvi/crypto/opes.hpp"
#include "pvi/crypto/schnorr.hpp"
#include "pvi/protocol/bus.hpp"
#include "pvi/protocol/setup.hpp"
#include "pvi/protocol/transcript.hpp"

namespace pvi::protocol::detail {

// AI-side OT material for one codebook: slot i carries the key K_i, and the
// public table holds code_i XOR H(K_i).
struct MaskedCodebook {
  const crypto::OrderCodebook* book = nullptr;
  std::vector<mpz_class> keys;
  std::vector<mpz_class> masked;

  void build(const crypto::GroupParams& group, const crypto::OrderCodebook& codebook, Rng& rng);
  void serialize_into(ByteWriter& w) const;
};

// One OT run between a receiver and the AI; returns the unmasked code of the
// 0-based slot.
mpz_class fetch_code(Bus& bus, const crypto::GroupParams& group, const MaskedCodebook& table,
                     std::size_t slot, const PartyId& receiver, std::int64_t round, Phase phase,
                     Rng& receiver_rng, Rng& ai_rng);

// Signs, posts and accounts for a board entry. Throws VerificationError if
// the board rejects it.
std::uint64_t post(RunTranscript& tr, const PartyId& author, const crypto::SigningKey& key,
                   std::int64_t time, Phase phase, board::Payload payload, Rng& rng);

void register_parties(RunTranscript& tr, const SystemSetup& setup,
                      const std::vector<mech::SensingProfile>& profiles);

// Blind receipt message for a commitment: an integer in [1, q).
mpz_class receipt_message(const crypto::GroupParams& group, std::span<const std::uint8_t> commitment,
                          const std::string& tid, std::int64_t deadline);

std::string fraction(const mpq_class& v);

}  // namespace pvi::protocol::detail
