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
#include <optional>
#include <span>

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"

namespace pvi::crypto {

// Hybrid commitment under the service key tpk = g^tsk: an ephemeral g^e and
// a ChaCha20-Poly1305 box keyed by SHA-256(tpk^e).
struct TlcCommitment {
  mpz_class ephemeral;
  Bytes nonce;
  Bytes box;

  // Fixed-width for a fixed payload length.
  Bytes serialize(const GroupParams& group) const;
  static TlcCommitment deserialize(const GroupParams& group, std::span<const std::uint8_t> data);
  bool operator==(const TlcCommitment&) const = default;
};

TlcCommitment tlc_commit(const GroupParams& group, const mpz_class& tpk,
                         std::span<const std::uint8_t> payload, Rng& rng);
// Throws DecryptionError on any malformed or tampered commitment.
Bytes tlc_open_with_key(const GroupParams& group, const mpz_class& tsk,
                        const TlcCommitment& commitment);

// Trusted key-release service driven by a logical clock.
class TlcService {
 public:
  TlcService(const GroupParams& group, std::int64_t release_time, Rng& rng);

  const mpz_class& public_key() const { return tpk_; }
  std::int64_t release_time() const { return release_time_; }
  std::int64_t current_time() const { return now_; }
  void advance_to(std::int64_t t);
  bool released() const { return now_ >= release_time_; }

  // Throws TimingError at or after release.
  TlcCommitment commit(std::span<const std::uint8_t> payload, Rng& rng) const;
  // Throws TimingError before release.
  Bytes open(const TlcCommitment& commitment) const;
  Bytes open(std::span<const std::uint8_t> serialized) const;
  // The private key, only once released.
  std::optional<mpz_class> release_key() const;

 private:
  const GroupParams& group_;
  std::int64_t release_time_;
  std::int64_t now_ = 0;
  mpz_class tsk_;
  mpz_class tpk_;
};

}  // namespace pvi::crypto
