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

#include "pvi/common/rng.hpp"

namespace pvi::crypto {

inline constexpr int kPrimalityRounds = 64;

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod);
// Throws ArithmeticError when value is not invertible.
mpz_class invert(const mpz_class& value, const mpz_class& mod);
// Non-negative residue.
mpz_class mod(const mpz_class& value, const mpz_class& m);
bool is_probable_prime(const mpz_class& n);
// Prime of exactly the requested bit length (top bit set). Throws
// GenerationError after max_attempts draws.
mpz_class random_prime(unsigned bits, Rng& rng, int max_attempts = 1000);
unsigned bit_length(const mpz_class& n);

}  // namespace pvi::crypto
