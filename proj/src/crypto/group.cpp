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
#include "pvi/crypto/group.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"

namespace pvi::crypto {

bool GroupParams::contains(const mpz_class& x) const {
  if (x <= 0 || x >= p) return false;
  return powm(x, q, p) == 1;
}

void GroupParams::validate() const {
  if (!is_probable_prime(p)) throw DomainError("group modulus p is not prime");
  if (!is_probable_prime(q)) throw DomainError("subgroup order q is not prime");
  if (mod(p - 1, q) != 0) throw DomainError("q does not divide p-1");
  if (g == 1 || !contains(g)) throw DomainError("g is not a generator of the order-q subgroup");
  if (h == 1 || !contains(h)) throw DomainError("h is not a generator of the order-q subgroup");
}

Bytes GroupParams::serialize() const {
  ByteWriter w;
  w.mpz(p).mpz(q).mpz(g).mpz(h);
  return std::move(w).take();
}

GroupParams GroupParams::deserialize(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  GroupParams out;
  out.p = r.mpz();
  out.q = r.mpz();
  out.g = r.mpz();
  out.h = r.mpz();
  r.expect_done();
  return out;
}

namespace {

mpz_class subgroup_generator(const GroupParams& params, const mpz_class& cofactor, Rng& rng) {
  for (;;) {
    mpz_class x = rng.nonzero_below(params.p);
    mpz_class y = powm(x, cofactor, params.p);
    if (y != 1) return y;
  }
}

}  // namespace

GroupParams generate_group(unsigned p_bits, unsigned q_bits, Rng& rng) {
  if (q_bits + 2 > p_bits) throw DomainError("subgroup order must be smaller than the modulus");
  GroupParams out;
  constexpr int kMaxCofactorTries = 100000;
  for (int outer = 0; outer < 16; ++outer) {
    out.q = random_prime(q_bits, rng);
    for (int i = 0; i < kMaxCofactorTries; ++i) {
      mpz_class k = rng.bits(p_bits - q_bits);
      mpz_setbit(k.get_mpz_t(), p_bits - q_bits - 1);
      mpz_clrbit(k.get_mpz_t(), 0);
      mpz_class p = k * out.q + 1;
      if (bit_length(p) != p_bits) continue;
      if (!is_probable_prime(p)) continue;
      out.p = p;
      mpz_class cofactor = (p - 1) / out.q;
      out.g = subgroup_generator(out, cofactor, rng);
      do {
        out.h = subgroup_generator(out, cofactor, rng);
      } while (out.h == out.g);
      return out;
    }
  }
  throw GenerationError("group parameter generation exhausted its retry budget");
}

const GroupParams& shared_group(unsigned p_bits, unsigned q_bits, std::uint64_t seed) {
  static std::mutex mu;
  static std::map<std::tuple<unsigned, unsigned, std::uint64_t>, std::unique_ptr<GroupParams>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p_bits, q_bits, seed}];
  if (!slot) {
    Rng rng(seed);
    slot = std::make_unique<GroupParams>(generate_group(p_bits, q_bits, rng));
  }
  return *slot;
}

}  // namespace pvi::crypto
