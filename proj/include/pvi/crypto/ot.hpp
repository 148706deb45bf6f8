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

#include <cstddef>
#include <vector>

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"

namespace pvi::crypto {

// 1-out-of-z OT over (g, h). The receiver sends y = g^r h^alpha; the sender
// answers every slot i with (g^{k_i}, m_i (y / h^i)^{k_i}).
struct OtQuery {
  mpz_class y;
};

struct OtReceiverState {
  std::size_t choice = 0;  // 1-based
  mpz_class r;
};

struct OtResponse {
  std::vector<mpz_class> a;
  std::vector<mpz_class> b;

  std::size_t byte_size(const GroupParams& group) const { return 2 * a.size() * group.element_bytes(); }
};

OtQuery ot_query(const GroupParams& group, std::size_t choice, std::size_t z, Rng& rng,
                 OtReceiverState& state);
OtResponse ot_respond(const GroupParams& group, const std::vector<mpz_class>& messages,
                      const OtQuery& query, Rng& rng);
mpz_class ot_recover(const GroupParams& group, const OtResponse& response,
                     const OtReceiverState& state);

// Runs all three steps locally.
mpz_class ot_transfer(const std::vector<mpz_class>& sender_messages, std::size_t choice,
                      const GroupParams& group, Rng& rng);

// Symmetric mask for carrying a code of at most 256 bits under a group-element
// key: code XOR H(key), truncated to code_bits.
mpz_class mask_code(const GroupParams& group, const mpz_class& key, const mpz_class& code,
                    unsigned code_bits);

}  // namespace pvi::crypto
