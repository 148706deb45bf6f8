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
#include "pvi/common/rng.hpp"

#include "pvi/common/errors.hpp"

namespace pvi {

Rng::Rng(std::uint64_t seed) : state_(std::make_unique<gmp_randclass>(gmp_randinit_mt)) {
  mpz_class s;
  mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
  state_->seed(s);
}

mpz_class Rng::below(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw DomainError("random bound must be positive");
  return state_->get_z_range(bound);
}

mpz_class Rng::nonzero_below(const mpz_class& bound) {
  if (bound <= 1) throw DomainError("no nonzero value below bound");
  return below(bound - 1) + 1;
}

mpz_class Rng::unit_mod(const mpz_class& n) {
  for (;;) {
    mpz_class r = nonzero_below(n);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    if (g == 1) return r;
  }
}

mpz_class Rng::bits(unsigned count) { return state_->get_z_bits(count); }

std::uint64_t Rng::next_u64() {
  mpz_class v = state_->get_z_bits(64);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

std::uint64_t Rng::below_u64(std::uint64_t bound) {
  if (bound == 0) throw DomainError("random bound must be positive");
  mpz_class b;
  mpz_import(b.get_mpz_t(), 1, 1, sizeof(bound), 0, 0, &bound);
  mpz_class v = state_->get_z_range(b);
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

bool Rng::bernoulli(const mpq_class& p) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return below(p.get_den()) < p.get_num();
}

std::vector<std::uint8_t> Rng::bytes(std::size_t count) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = static_cast<std::uint8_t>(mpz_class(state_->get_z_bits(8)).get_ui());
  return out;
}

Rng Rng::fork() { return Rng(next_u64()); }

}  // namespace pvi
