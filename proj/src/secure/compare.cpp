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
#include "pvi/secure/compare.hpp"

#include "pvi/common/errors.hpp"

namespace pvi::secure {

char ordering_tag(Ordering o) {
  switch (o) {
    case Ordering::kLess: return '<';
    case Ordering::kEqual: return '=';
    case Ordering::kGreater: return '>';
  }
  return '?';
}

Ordering ComparisonAuthority::compare(const crypto::PaillierCiphertext& a,
                                      const crypto::PaillierCiphertext& b) {
  if (a.key_id != key_.pub().key_id() || b.key_id != key_.pub().key_id())
    throw UsageError("comparison operands are not under the authority key");
  ++requests_;
  mpz_class x = key_.decrypt(a);
  mpz_class y = key_.decrypt(b);
  Ordering out = x < y ? Ordering::kLess : (x == y ? Ordering::kEqual : Ordering::kGreater);
  if (observer_) observer_(out);
  return out;
}

Ordering encrypted_compare(const crypto::PaillierCiphertext& a, const crypto::PaillierCiphertext& b,
                           ComparisonAuthority& ai) {
  return ai.compare(a, b);
}

std::size_t encrypted_argmax(const std::vector<crypto::PaillierCiphertext>& values,
                             ComparisonAuthority& ai) {
  if (values.empty()) throw UsageError("argmax of an empty list");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (ai.compare(values[i], values[best]) == Ordering::kGreater) best = i;
  return best;
}

crypto::PaillierCiphertext encrypted_max(const crypto::PaillierCiphertext& a,
                                         const crypto::PaillierCiphertext& b,
                                         ComparisonAuthority& ai, Rng& rng) {
  const auto& pick = ai.compare(a, b) == Ordering::kLess ? b : a;
  return ai.public_key().rerandomize(pick, rng);
}

crypto::PaillierCiphertext encrypted_min(const crypto::PaillierCiphertext& a,
                                         const crypto::PaillierCiphertext& b,
                                         ComparisonAuthority& ai, Rng& rng) {
  const auto& pick = ai.compare(a, b) == Ordering::kGreater ? b : a;
  return ai.public_key().rerandomize(pick, rng);
}

}  // namespace pvi::secure
