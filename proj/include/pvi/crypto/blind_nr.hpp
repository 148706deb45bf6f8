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

#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"
#include "pvi/crypto/schnorr.hpp"

namespace pvi::crypto {

// Blind Nyberg-Rueppel signature with message recovery: m = g^{-s} y^r r (mod p).
struct BlindSignature {
  mpz_class r;  // mod p
  mpz_class s;  // mod q

  bool operator==(const BlindSignature&) const = default;
};

inline constexpr int kDefaultSignatureScale = 4;
inline constexpr int kBlindRetries = 64;

// Signer side of one session. commit() must precede respond().
class BlindSigner {
 public:
  BlindSigner(const GroupParams& group, const SigningKey& key) : group_(group), key_(key) {}

  mpz_class commit(Rng& rng);
  mpz_class respond(const mpz_class& blinded_message);

 private:
  const GroupParams& group_;
  const SigningKey& key_;
  mpz_class k_;
  bool open_ = false;
};

// Signee side of one session.
class BlindSignee {
 public:
  BlindSignee(const GroupParams& group, mpz_class signer_y) : group_(group), y_(std::move(signer_y)) {}

  // Returns m~ in Z_q^*; throws GenerationError after kBlindRetries zeros.
  mpz_class blind(const mpz_class& message, const mpz_class& signer_commitment, Rng& rng);
  BlindSignature unblind(const mpz_class& signer_response) const;

 private:
  const GroupParams& group_;
  mpz_class y_;
  mpz_class alpha_, beta_, r_;
};

BlindSignature blind_sign(const GroupParams& group, const SigningKey& key, const mpz_class& message,
                          Rng& rng);
bool blind_verify(const GroupParams& group, const mpz_class& y, const mpz_class& message,
                  const BlindSignature& sig);

// floor(10^k * value) as an integer message.
mpz_class scale_message(const mpq_class& value, int k = kDefaultSignatureScale);

}  // namespace pvi::crypto
