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
#include "pvi/secure/set_union.hpp"

#include <algorithm>

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"

namespace pvi::secure {

mpz_class encode_assignment(std::uint32_t index) { return mpz_class(kAssignmentOffset + index); }

std::uint32_t decode_assignment(const mpz_class& value) {
  if (value < kAssignmentOffset || !value.fits_uint_p())
    throw EncodingError("value is not an encoded assignment");
  return static_cast<std::uint32_t>(value.get_ui()) - kAssignmentOffset;
}

std::vector<crypto::PaillierCiphertext> psu_encrypt_polynomial(
    const crypto::PaillierPublicKey& pk, const std::vector<mpz_class>& platform_set, Rng& rng) {
  const mpz_class& n = pk.n();
  std::vector<mpz_class> coeffs{1};
  for (const mpz_class& a : platform_set) {
    if (a <= 0 || a >= n) throw EncodingError("set element must be in [1, n)");
    // coeffs *= (x - a)
    coeffs.push_back(0);
    for (std::size_t k = coeffs.size() - 1; k > 0; --k)
      coeffs[k] = crypto::mod(coeffs[k - 1] - a * coeffs[k], n);
    coeffs[0] = crypto::mod(-a * coeffs[0], n);
  }
  std::vector<crypto::PaillierCiphertext> out;
  out.reserve(coeffs.size());
  for (const mpz_class& c : coeffs) out.push_back(pk.encrypt(c, rng));
  return out;
}

std::vector<PsuTuple> psu_evaluate(const crypto::PaillierPublicKey& pk,
                                   const std::vector<crypto::PaillierCiphertext>& coefficients,
                                   const std::vector<mpz_class>& user_set, Rng& rng) {
  if (coefficients.empty()) throw UsageError("empty encrypted polynomial");
  std::vector<PsuTuple> out;
  out.reserve(user_set.size());
  for (const mpz_class& tau : user_set) {
    if (tau <= 0 || tau >= pk.n()) throw EncodingError("set element must be in [1, n)");
    // Horner: f(tau) = (...(c_d tau + c_{d-1}) tau + ...) + c_0
    crypto::PaillierCiphertext acc = coefficients.back();
    for (std::size_t k = coefficients.size() - 1; k > 0; --k)
      acc = pk.add(pk.scale(acc, tau), coefficients[k - 1]);
    mpz_class r = rng.nonzero_below(pk.n());
    out.push_back({pk.rerandomize(pk.scale(acc, tau * r), rng),
                   pk.rerandomize(pk.scale(acc, r), rng)});
  }
  rng.shuffle(out);
  return out;
}

std::vector<mpz_class> psu_extract(const crypto::PaillierKeypair& key,
                                   const std::vector<PsuTuple>& tuples) {
  std::vector<mpz_class> out;
  for (const PsuTuple& t : tuples) {
    mpz_class x = key.decrypt(t.x);
    mpz_class y = key.decrypt(t.y);
    if (x == 0 && y == 0) continue;
    out.push_back(crypto::mod(x * crypto::invert(y, key.pub().n()), key.pub().n()));
  }
  return out;
}

std::vector<mpz_class> private_set_union(const std::vector<mpz_class>& platform_set,
                                         const std::vector<mpz_class>& user_set,
                                         const crypto::PaillierKeypair& key, Rng& rng) {
  auto coeffs = psu_encrypt_polynomial(key.pub(), platform_set, rng);
  auto added = psu_extract(key, psu_evaluate(key.pub(), coeffs, user_set, rng));
  std::sort(added.begin(), added.end());
  return added;
}

}  // namespace pvi::secure
