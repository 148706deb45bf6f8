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

// Prime-order subgroup of Z_p^*: q | p-1, g and h both of order q. h is drawn
// independently of g (trusted setup), so log_g(h) is unknown to every party.
struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class g;
  mpz_class h;

  std::size_t element_bytes() const { return (mpz_sizeinbase(p.get_mpz_t(), 2) + 7) / 8; }
  bool contains(const mpz_class& x) const;
  // Throws DomainError listing the first violated invariant.
  void validate() const;
  Bytes serialize() const;
  static GroupParams deserialize(std::span<const std::uint8_t> data);

  bool operator==(const GroupParams&) const = default;
};

inline constexpr unsigned kDefaultGroupBits = 512;
inline constexpr unsigned kDefaultSubgroupBits = 256;

GroupParams generate_group(unsigned p_bits, unsigned q_bits, Rng& rng);

// Memoized generate_group keyed on (p_bits, q_bits, seed). Group parameters
// are system-wide, so campaigns of many runs share one instance.
const GroupParams& shared_group(unsigned p_bits = kDefaultGroupBits,
                                unsigned q_bits = kDefaultSubgroupBits, std::uint64_t seed = 1);

}  // namespace pvi::crypto
