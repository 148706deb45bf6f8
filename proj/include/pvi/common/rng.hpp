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
#include <memory>
#include <vector>

namespace pvi {

// Deterministic randomness source. One instance is seeded per run and every
// random draw in that run (keys, nonces, audit coins, permutations) comes
// from it or from a child forked off it, so a run replays bit-exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  Rng(Rng&&) noexcept = default;
  Rng& operator=(Rng&&) noexcept = default;

  // Uniform in [0, bound); bound must be positive.
  mpz_class below(const mpz_class& bound);
  // Uniform in [1, bound).
  mpz_class nonzero_below(const mpz_class& bound);
  // Uniform in Z_n^* (coprime to n).
  mpz_class unit_mod(const mpz_class& n);
  mpz_class bits(unsigned count);

  std::uint64_t next_u64();
  std::uint64_t below_u64(std::uint64_t bound);
  // True with probability exactly p (p in [0,1]).
  bool bernoulli(const mpq_class& p);
  std::vector<std::uint8_t> bytes(std::size_t count);

  // Child stream seeded from this one; draws from the child never perturb
  // the parent beyond the one seed draw.
  Rng fork();

  // Fisher-Yates shuffle driven by this stream.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below_u64(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::unique_ptr<gmp_randclass> state_;
};

}  // namespace pvi
