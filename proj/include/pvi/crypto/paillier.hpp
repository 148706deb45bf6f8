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

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"

namespace pvi::crypto {

struct PaillierCiphertext {
  mpz_class value;
  std::uint64_t key_id = 0;

  Bytes serialize(std::size_t width) const;
  bool operator==(const PaillierCiphertext&) const = default;
};

// Public half with generator g_n = n + 1. key_id is derived from n.
class PaillierPublicKey {
 public:
  PaillierPublicKey() = default;
  explicit PaillierPublicKey(mpz_class n);

  const mpz_class& n() const { return n_; }
  const mpz_class& n_squared() const { return n2_; }
  mpz_class g() const { return n_ + 1; }
  std::uint64_t key_id() const { return key_id_; }
  // Width in bytes of a serialized ciphertext.
  std::size_t ciphertext_bytes() const;

  // m in [0, n); r in Z_n^*. Throws DomainError otherwise.
  PaillierCiphertext encrypt(const mpz_class& m, const mpz_class& r) const;
  PaillierCiphertext encrypt(const mpz_class& m, Rng& rng) const;
  // Reduces m modulo n first; used for signed or wrapped plaintexts.
  PaillierCiphertext encrypt_mod(const mpz_class& m, Rng& rng) const;

  PaillierCiphertext add(const PaillierCiphertext& a, const PaillierCiphertext& b) const;
  PaillierCiphertext add_plain(const PaillierCiphertext& a, const mpz_class& m) const;
  PaillierCiphertext scale(const PaillierCiphertext& a, const mpz_class& k) const;
  PaillierCiphertext negate(const PaillierCiphertext& a) const;
  PaillierCiphertext rerandomize(const PaillierCiphertext& a, Rng& rng) const;

  // Recovers the plaintext given the encryption randomness, no secret key
  // needed. Throws DecryptionError when r does not open c.
  mpz_class open_with_randomness(const PaillierCiphertext& c, const mpz_class& r) const;

  void check(const PaillierCiphertext& c) const;

  Bytes serialize() const;
  static PaillierPublicKey deserialize(std::span<const std::uint8_t> data);

 private:
  mpz_class n_;
  mpz_class n2_;
  std::uint64_t key_id_ = 0;
};

class PaillierKeypair {
 public:
  PaillierKeypair() = default;
  PaillierKeypair(mpz_class p, mpz_class q);

  const PaillierPublicKey& pub() const { return pub_; }
  const mpz_class& lambda() const { return lambda_; }
  const mpz_class& mu() const { return mu_; }
  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }

  mpz_class decrypt(const PaillierCiphertext& c) const;
  // Decryption mapped into (-n/2, n/2].
  mpz_class decrypt_signed(const PaillierCiphertext& c) const;
  // Recovers the randomness r with c = g^m r^n mod n^2.
  mpz_class randomness_of(const PaillierCiphertext& c) const;

  Bytes serialize() const;
  static PaillierKeypair deserialize(std::span<const std::uint8_t> data);

 private:
  mpz_class p_, q_;
  PaillierPublicKey pub_;
  mpz_class lambda_, mu_;
  // CRT decryption constants.
  mpz_class p2_, q2_, hp_, hq_, q_inv_p_;
};

PaillierKeypair paillier_keygen(unsigned bit_length, Rng& rng);
PaillierKeypair paillier_keygen(unsigned bit_length, std::uint64_t rng_seed);

}  // namespace pvi::crypto
