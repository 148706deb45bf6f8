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

#include "pvi/common/rng.hpp"
#include "pvi/crypto/paillier.hpp"

namespace pvi::secure {

// Assignment indices travel as offset + index so every value is nonzero.
inline constexpr std::uint32_t kAssignmentOffset = 256;

mpz_class encode_assignment(std::uint32_t index);
std::uint32_t decode_assignment(const mpz_class& value);

struct PsuTuple {
  crypto::PaillierCiphertext x;  // E(f(tau) tau r)
  crypto::PaillierCiphertext y;  // E(f(tau) r)
};

// Encrypted coefficients of prod (x - a) over the platform set, constant
// term first.
std::vector<crypto::PaillierCiphertext> psu_encrypt_polynomial(
    const crypto::PaillierPublicKey& pk, const std::vector<mpz_class>& platform_set, Rng& rng);

// User side: one shuffled tuple per element. Throws EncodingError for values
// that are zero or not below n.
std::vector<PsuTuple> psu_evaluate(const crypto::PaillierPublicKey& pk,
                                   const std::vector<crypto::PaillierCiphertext>& coefficients,
                                   const std::vector<mpz_class>& user_set, Rng& rng);

// Platform side: values x y^{-1} of every tuple not decrypting to (0, 0).
std::vector<mpz_class> psu_extract(const crypto::PaillierKeypair& key,
                                   const std::vector<PsuTuple>& tuples);

// All three steps; returns user_set minus platform_set in ascending order.
std::vector<mpz_class> private_set_union(const std::vector<mpz_class>& platform_set,
                                         const std::vector<mpz_class>& user_set,
                                         const crypto::PaillierKeypair& key, Rng& rng);

}  // namespace pvi::secure
