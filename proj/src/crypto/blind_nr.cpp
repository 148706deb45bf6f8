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
#include "pvi/crypto/blind_nr.hpp"

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"

namespace pvi::crypto {

mpz_class BlindSigner::commit(Rng& rng) {
  k_ = rng.nonzero_below(group_.q);
  open_ = true;
  return powm(group_.g, k_, group_.p);
}

mpz_class BlindSigner::respond(const mpz_class& blinded_message) {
  if (!open_) throw UsageError("blind signer responded without a commitment");
  if (blinded_message <= 0 || blinded_message >= group_.q)
    throw DomainError("blinded message outside Z_q^*");
  open_ = false;
  return mod(blinded_message * key_.x + k_, group_.q);
}

mpz_class BlindSignee::blind(const mpz_class& message, const mpz_class& signer_commitment,
                             Rng& rng) {
  if (message <= 0 || message >= group_.p) throw DomainError("message not representable mod p");
  if (!group_.contains(signer_commitment)) throw DomainError("signer commitment outside the group");
  for (int i = 0; i < kBlindRetries; ++i) {
    alpha_ = rng.below(group_.q);
    beta_ = rng.nonzero_below(group_.q);
    r_ = mod(message * powm(group_.g, alpha_, group_.p) * powm(signer_commitment, beta_, group_.p),
             group_.p);
    mpz_class blinded = mod(r_ * invert(beta_, group_.q), group_.q);
    if (blinded != 0) return blinded;
  }
  throw GenerationError("blinded message stayed zero after bounded retries");
}

BlindSignature BlindSignee::unblind(const mpz_class& signer_response) const {
  return {r_, mod(signer_response * beta_ + alpha_, group_.q)};
}

BlindSignature blind_sign(const GroupParams& group, const SigningKey& key, const mpz_class& message,
                          Rng& rng) {
  BlindSigner signer(group, key);
  BlindSignee signee(group, key.y);
  mpz_class commitment = signer.commit(rng);
  mpz_class blinded = signee.blind(message, commitment, rng);
  return signee.unblind(signer.respond(blinded));
}

bool blind_verify(const GroupParams& group, const mpz_class& y, const mpz_class& message,
                  const BlindSignature& sig) {
  if (sig.r <= 0 || sig.r >= group.p || sig.s < 0 || sig.s >= group.q) return false;
  mpz_class neg_s = mod(-sig.s, group.q);
  mpz_class rhs = mod(powm(group.g, neg_s, group.p) * powm(y, mod(sig.r, group.q), group.p) * sig.r,
                      group.p);
  return rhs == message;
}

mpz_class scale_message(const mpq_class& value, int k) {
  mpz_class ten_k;
  mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, static_cast<unsigned long>(k));
  mpz_class num = value.get_num() * ten_k;
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), value.get_den_mpz_t());
  return out;
}

}  // namespace pvi::crypto
