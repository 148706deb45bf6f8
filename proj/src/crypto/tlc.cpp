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
#include "pvi/crypto/tlc.hpp"

#include <sodium.h>

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/hash.hpp"

namespace pvi::crypto {

namespace {

constexpr std::size_t kNonceBytes = crypto_aead_chacha20poly1305_ietf_NPUBBYTES;
constexpr std::size_t kTagBytes = crypto_aead_chacha20poly1305_ietf_ABYTES;

Digest shared_key(const GroupParams& group, const mpz_class& shared) {
  ByteWriter w;
  w.str("pvi.tlc").mpz_fixed(shared, group.element_bytes());
  return sha256(w.data());
}

}  // namespace

Bytes TlcCommitment::serialize(const GroupParams& group) const {
  ByteWriter w;
  w.mpz_fixed(ephemeral, group.element_bytes()).bytes(nonce).bytes(box);
  return std::move(w).take();
}

TlcCommitment TlcCommitment::deserialize(const GroupParams& group,
                                         std::span<const std::uint8_t> data) {
  try {
    ByteReader r(data);
    TlcCommitment out;
    out.ephemeral = r.mpz_fixed(group.element_bytes());
    out.nonce = r.bytes();
    out.box = r.bytes();
    r.expect_done();
    return out;
  } catch (const ParseError& e) {
    throw DecryptionError(std::string("malformed commitment: ") + e.what());
  }
}

TlcCommitment tlc_commit(const GroupParams& group, const mpz_class& tpk,
                         std::span<const std::uint8_t> payload, Rng& rng) {
  mpz_class e = rng.nonzero_below(group.q);
  TlcCommitment out;
  out.ephemeral = powm(group.g, e, group.p);
  out.nonce = rng.bytes(kNonceBytes);
  Digest key = shared_key(group, powm(tpk, e, group.p));
  out.box.resize(payload.size() + kTagBytes);
  unsigned long long len = 0;
  crypto_aead_chacha20poly1305_ietf_encrypt(out.box.data(), &len, payload.data(), payload.size(),
                                            nullptr, 0, nullptr, out.nonce.data(), key.data());
  out.box.resize(len);
  return out;
}

Bytes tlc_open_with_key(const GroupParams& group, const mpz_class& tsk,
                        const TlcCommitment& commitment) {
  if (commitment.nonce.size() != kNonceBytes || commitment.box.size() < kTagBytes)
    throw DecryptionError("malformed commitment");
  if (!group.contains(commitment.ephemeral)) throw DecryptionError("commitment outside the group");
  Digest key = shared_key(group, powm(commitment.ephemeral, tsk, group.p));
  Bytes out(commitment.box.size() - kTagBytes);
  unsigned long long len = 0;
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &len, nullptr, commitment.box.data(),
                                                commitment.box.size(), nullptr, 0,
                                                commitment.nonce.data(), key.data()) != 0)
    throw DecryptionError("commitment failed authentication");
  out.resize(len);
  return out;
}

TlcService::TlcService(const GroupParams& group, std::int64_t release_time, Rng& rng)
    : group_(group), release_time_(release_time) {
  tsk_ = rng.nonzero_below(group.q);
  tpk_ = powm(group.g, tsk_, group.p);
}

void TlcService::advance_to(std::int64_t t) {
  if (t < now_) throw UsageError("logical clock cannot move backwards");
  now_ = t;
}

TlcCommitment TlcService::commit(std::span<const std::uint8_t> payload, Rng& rng) const {
  if (released()) throw TimingError("commitment window closed");
  return tlc_commit(group_, tpk_, payload, rng);
}

Bytes TlcService::open(const TlcCommitment& commitment) const {
  if (!released()) throw TimingError("key not yet released");
  return tlc_open_with_key(group_, tsk_, commitment);
}

Bytes TlcService::open(std::span<const std::uint8_t> serialized) const {
  if (!released()) throw TimingError("key not yet released");
  return tlc_open_with_key(group_, tsk_, TlcCommitment::deserialize(group_, serialized));
}

std::optional<mpz_class> TlcService::release_key() const {
  if (!released()) return std::nullopt;
  return tsk_;
}

}  // namespace pvi::crypto
