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
#include "pvi/crypto/ot.hpp"

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/hash.hpp"

namespace pvi::crypto {

OtQuery ot_query(const GroupParams& group, std::size_t choice, std::size_t z, Rng& rng,
                 OtReceiverState& state) {
  if (choice < 1 || choice > z) throw DomainError("OT choice outside [1, z]");
  state.choice = choice;
  state.r = rng.below(group.q);
  mpz_class y = powm(group.g, state.r, group.p) * powm(group.h, mpz_class(choice), group.p);
  return {mod(y, group.p)};
}

OtResponse ot_respond(const GroupParams& group, const std::vector<mpz_class>& messages,
                      const OtQuery& query, Rng& rng) {
  if (!group.contains(query.y)) throw DomainError("OT query outside the group");
  OtResponse out;
  out.a.reserve(messages.size());
  out.b.reserve(messages.size());
  mpz_class h_inv = invert(group.h, group.p);
  mpz_class base = query.y;
  for (const mpz_class& m : messages) {
    base = mod(base * h_inv, group.p);  // y / h^i
    mpz_class k = rng.nonzero_below(group.q);
    out.a.push_back(powm(group.g, k, group.p));
    out.b.push_back(mod(m * powm(base, k, group.p), group.p));
  }
  return out;
}

mpz_class ot_recover(const GroupParams& group, const OtResponse& response,
                     const OtReceiverState& state) {
  if (state.choice < 1 || state.choice > response.a.size())
    throw DomainError("OT choice outside the response");
  const mpz_class& a = response.a[state.choice - 1];
  const mpz_class& b = response.b[state.choice - 1];
  return mod(b * invert(powm(a, state.r, group.p), group.p), group.p);
}

mpz_class ot_transfer(const std::vector<mpz_class>& sender_messages, std::size_t choice,
                      const GroupParams& group, Rng& rng) {
  OtReceiverState state;
  OtQuery query = ot_query(group, choice, sender_messages.size(), rng, state);
  return ot_recover(group, ot_respond(group, sender_messages, query, rng), state);
}

mpz_class mask_code(const GroupParams& group, const mpz_class& key, const mpz_class& code,
                    unsigned code_bits) {
  if (code_bits == 0 || code_bits > 256) throw DomainError("mask width must be in [1, 256]");
  ByteWriter w;
  w.str("pvi.ot.mask").mpz_fixed(key, group.element_bytes());
  Digest d = sha256(w.data());
  mpz_class pad = mpz_from_bytes(d);
  mpz_class mask;
  mpz_fdiv_r_2exp(mask.get_mpz_t(), pad.get_mpz_t(), code_bits);
  mpz_class out;
  mpz_xor(out.get_mpz_t(), code.get_mpz_t(), mask.get_mpz_t());
  return out;
}

}  // namespace pvi::crypto
