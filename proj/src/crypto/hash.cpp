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
#include "pvi/crypto/hash.hpp"

#include <sodium.h>

#include "pvi/common/errors.hpp"

namespace pvi::crypto {

namespace {

void ensure_sodium() {
  static const int rc = sodium_init();
  if (rc < 0) throw Error("libsodium initialization failed");
}

}  // namespace

Digest sha256(std::span<const std::uint8_t> data) {
  ensure_sodium();
  Digest out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

std::string sha256_hex(std::span<const std::uint8_t> data) { return to_hex(sha256(data)); }

mpz_class hash_to_int(std::span<const std::uint8_t> data, const mpz_class& m) {
  Digest d = sha256(data);
  mpz_class v = mpz_from_bytes(d);
  mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return v;
}

}  // namespace pvi::crypto
