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
#include "pvi/crypto/schnorr.hpp"

#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/hash.hpp"

namespace pvi::crypto {

namespace {

mpz_class challenge(const GroupParams& group, const mpz_class& commitment,
                    std::span<const std::uint8_t> message) {
  ByteWriter w;
  w.str("pvi.schnorr").mpz_fixed(commitment, group.element_bytes()).bytes(message);
  return hash_to_int(w.data(), group.q);
}

}  // namespace

Bytes SchnorrSignature::serialize(const GroupParams& group) const {
  std::size_t width = (mpz_sizeinbase(group.q.get_mpz_t(), 2) + 7) / 8;
  ByteWriter w;
  w.mpz_fixed(e, width).mpz_fixed(s, width);
  return std::move(w).take();
}

SigningKey generate_signing_key(const GroupParams& group, Rng& rng) {
  SigningKey key;
  key.x = rng.nonzero_below(group.q);
  key.y = powm(group.g, key.x, group.p);
  return key;
}

SchnorrSignature schnorr_sign(const GroupParams& group, const SigningKey& key,
                              std::span<const std::uint8_t> message, Rng& rng) {
  mpz_class k = rng.nonzero_below(group.q);
  mpz_class e = challenge(group, powm(group.g, k, group.p), message);
  return {e, mod(k + key.x * e, group.q)};
}

bool schnorr_verify(const GroupParams& group, const mpz_class& y,
                    std::span<const std::uint8_t> message, const SchnorrSignature& sig) {
  if (sig.e < 0 || sig.e >= group.q || sig.s < 0 || sig.s >= group.q) return false;
  if (!group.contains(y)) return false;
  // g^s y^{-e} recovers the commitment g^k.
  mpz_class r = mod(powm(group.g, sig.s, group.p) * powm(y, group.q - sig.e, group.p), group.p);
  return challenge(group, r, message) == sig.e;
}

}  // namespace pvi::crypto
