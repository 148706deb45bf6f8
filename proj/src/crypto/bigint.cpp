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
#include "pvi/crypto/bigint.hpp"

#include "pvi/common/errors.hpp"

namespace pvi::crypto {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

mpz_class invert(const mpz_class& value, const mpz_class& mod) {
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), value.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw ArithmeticError("value is not invertible modulo m");
  return out;
}

mpz_class mod(const mpz_class& value, const mpz_class& m) {
  mpz_class out;
  mpz_mod(out.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return out;
}

bool is_probable_prime(const mpz_class& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

unsigned bit_length(const mpz_class& n) {
  return sgn(n) == 0 ? 0u : static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

mpz_class random_prime(unsigned bits, Rng& rng, int max_attempts) {
  if (bits < 8) throw DomainError("prime size too small");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    mpz_class candidate = rng.bits(bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_setbit(candidate.get_mpz_t(), 0);
    // Search a short window upward; restart on overflow past the bit length.
    for (int step = 0; step < 4 * static_cast<int>(bits); ++step, candidate += 2) {
      if (bit_length(candidate) != bits) break;
      if (is_probable_prime(candidate)) return candidate;
    }
  }
  throw GenerationError("prime generation exhausted its retry budget");
}

}  // namespace pvi::crypto
