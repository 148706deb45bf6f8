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

#include <span>

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"

namespace pvi::crypto {

struct SigningKey {
  mpz_class x;
  mpz_class y;  // g^x mod p
};

struct SchnorrSignature {
  mpz_class e;
  mpz_class s;

  Bytes serialize(const GroupParams& group) const;
  bool operator==(const SchnorrSignature&) const = default;
};

SigningKey generate_signing_key(const GroupParams& group, Rng& rng);

SchnorrSignature schnorr_sign(const GroupParams& group, const SigningKey& key,
                              std::span<const std::uint8_t> message, Rng& rng);
bool schnorr_verify(const GroupParams& group, const mpz_class& y,
                    std::span<const std::uint8_t> message, const SchnorrSignature& sig);

}  // namespace pvi::crypto
