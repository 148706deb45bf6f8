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
#include "pvi/crypto/paillier.hpp"

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/hash.hpp"

namespace pvi::crypto {

Bytes PaillierCiphertext::serialize(std::size_t width) const {
  ByteWriter w;
  w.u64(key_id).mpz_fixed(value, width);
  return std::move(w).take();
}

PaillierPublicKey::PaillierPublicKey(mpz_class n) : n_(std::move(n)), n2_(n_ * n_) {
  Digest d = sha256(mpz_to_bytes(n_));
  for (int i = 0; i < 8; ++i) key_id_ = (key_id_ << 8) | d[i];
}

std::size_t PaillierPublicKey::ciphertext_bytes() const {
  return (mpz_sizeinbase(n2_.get_mpz_t(), 2) + 7) / 8;
}

void PaillierPublicKey::check(const PaillierCiphertext& c) const {
  if (c.key_id != key_id_) throw UsageError("ciphertext was produced under a different key");
}

PaillierCiphertext PaillierPublicKey::encrypt(const mpz_class& m, const mpz_class& r) const {
  if (m < 0 || m >= n_) throw DomainError("plaintext outside [0, n)");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n_.get_mpz_t());
  if (r <= 0 || r >= n_ || g != 1) throw DomainError("encryption randomness not in Z_n^*");
  // (n+1)^m = 1 + m n (mod n^2)
  mpz_class gm = mod(1 + m * n_, n2_);
  return {mod(gm * powm(r, n_, n2_), n2_), key_id_};
}

PaillierCiphertext PaillierPublicKey::encrypt(const mpz_class& m, Rng& rng) const {
  return encrypt(m, rng.unit_mod(n_));
}

PaillierCiphertext PaillierPublicKey::encrypt_mod(const mpz_class& m, Rng& rng) const {
  return encrypt(mod(m, n_), rng);
}

PaillierCiphertext PaillierPublicKey::add(const PaillierCiphertext& a,
                                          const PaillierCiphertext& b) const {
  check(a);
  check(b);
  return {mod(a.value * b.value, n2_), key_id_};
}

PaillierCiphertext PaillierPublicKey::add_plain(const PaillierCiphertext& a,
                                                const mpz_class& m) const {
  check(a);
  return {mod(a.value * mod(1 + mod(m, n_) * n_, n2_), n2_), key_id_};
}

PaillierCiphertext PaillierPublicKey::scale(const PaillierCiphertext& a, const mpz_class& k) const {
  check(a);
  return {powm(a.value, mod(k, n_), n2_), key_id_};
}

PaillierCiphertext PaillierPublicKey::negate(const PaillierCiphertext& a) const {
  check(a);
  return {invert(a.value, n2_), key_id_};
}

PaillierCiphertext PaillierPublicKey::rerandomize(const PaillierCiphertext& a, Rng& rng) const {
  check(a);
  return {mod(a.value * powm(rng.unit_mod(n_), n_, n2_), n2_), key_id_};
}

mpz_class PaillierPublicKey::open_with_randomness(const PaillierCiphertext& c,
                                                  const mpz_class& r) const {
  check(c);
  mpz_class rn_inv;
  try {
    rn_inv = invert(powm(r, n_, n2_), n2_);
  } catch (const ArithmeticError&) {
    throw DecryptionError("randomness is not a unit modulo n^2");
  }
  mpz_class u = mod(c.value * rn_inv, n2_) - 1;
  if (mod(u, n_) != 0) throw DecryptionError("randomness does not open the ciphertext");
  return u / n_;
}

Bytes PaillierPublicKey::serialize() const {
  ByteWriter w;
  w.mpz(n_);
  return std::move(w).take();
}

PaillierPublicKey PaillierPublicKey::deserialize(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  mpz_class n = r.mpz();
  r.expect_done();
  return PaillierPublicKey(std::move(n));
}

PaillierKeypair::PaillierKeypair(mpz_class p, mpz_class q)
    : p_(std::move(p)), q_(std::move(q)), pub_(p_ * q_) {
  if (p_ == q_) throw DomainError("Paillier primes must differ");
  if (bit_length(p_) != bit_length(q_)) throw DomainError("Paillier primes must have equal length");
  lambda_ = (p_ - 1) * (q_ - 1);
  mu_ = invert(lambda_, pub_.n());
  p2_ = p_ * p_;
  q2_ = q_ * q_;
  // h_p = L_p(g^{p-1} mod p^2)^{-1} mod p, with g = n + 1.
  mpz_class gp = powm(pub_.n() + 1, p_ - 1, p2_);
  hp_ = invert((gp - 1) / p_, p_);
  mpz_class gq = powm(pub_.n() + 1, q_ - 1, q2_);
  hq_ = invert((gq - 1) / q_, q_);
  q_inv_p_ = invert(q_, p_);
}

mpz_class PaillierKeypair::decrypt(const PaillierCiphertext& c) const {
  pub_.check(c);
  if (c.value <= 0 || c.value >= pub_.n_squared()) throw DecryptionError("ciphertext out of range");
  mpz_class mp = mod((powm(c.value, p_ - 1, p2_) - 1) / p_ * hp_, p_);
  mpz_class mq = mod((powm(c.value, q_ - 1, q2_) - 1) / q_ * hq_, q_);
  // Garner recombination.
  mpz_class h = mod((mp - mq) * q_inv_p_, p_);
  return mq + h * q_;
}

mpz_class PaillierKeypair::decrypt_signed(const PaillierCiphertext& c) const {
  mpz_class m = decrypt(c);
  if (2 * m > pub_.n()) m -= pub_.n();
  return m;
}

mpz_class PaillierKeypair::randomness_of(const PaillierCiphertext& c) const {
  mpz_class m = decrypt(c);
  const mpz_class& n = pub_.n();
  // c g^{-m} = r^n (mod n^2); r = (r^n mod n)^{n^{-1} mod lambda} mod n.
  mpz_class rn = mod(c.value * mod(1 - m * n, pub_.n_squared()), pub_.n_squared());
  return powm(mod(rn, n), invert(n, lambda_), n);
}

Bytes PaillierKeypair::serialize() const {
  ByteWriter w;
  w.mpz(p_).mpz(q_);
  return std::move(w).take();
}

PaillierKeypair PaillierKeypair::deserialize(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  mpz_class p = r.mpz();
  mpz_class q = r.mpz();
  r.expect_done();
  return PaillierKeypair(std::move(p), std::move(q));
}

PaillierKeypair paillier_keygen(unsigned bit_length_n, Rng& rng) {
  if (bit_length_n < 64 || bit_length_n % 2 != 0)
    throw DomainError("Paillier modulus size must be even and at least 64 bits");
  constexpr int kMaxTries = 200;
  for (int i = 0; i < kMaxTries; ++i) {
    mpz_class p = random_prime(bit_length_n / 2, rng);
    mpz_class q = random_prime(bit_length_n / 2, rng);
    if (p == q || bit_length(p * q) != bit_length_n) continue;
    return PaillierKeypair(std::move(p), std::move(q));
  }
  throw GenerationError("Paillier key generation exhausted its retry budget");
}

PaillierKeypair paillier_keygen(unsigned bit_length_n, std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return paillier_keygen(bit_length_n, rng);
}

}  // namespace pvi::crypto
