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

#include <cstddef>
#include <functional>
#include <vector>

#include "pvi/common/rng.hpp"
#include "pvi/crypto/paillier.hpp"

namespace pvi::secure {

enum class Ordering { kLess, kEqual, kGreater };

char ordering_tag(Ordering o);

// Holds the decryption key and answers ordering queries; callers only ever
// see the token.
class ComparisonAuthority {
 public:
  using Observer = std::function<void(Ordering)>;

  explicit ComparisonAuthority(const crypto::PaillierKeypair& key) : key_(key) {}

  const crypto::PaillierPublicKey& public_key() const { return key_.pub(); }
  // Throws UsageError if either ciphertext is under another key.
  Ordering compare(const crypto::PaillierCiphertext& a, const crypto::PaillierCiphertext& b);
  std::size_t requests() const { return requests_; }
  void set_observer(Observer observer) { observer_ = std::move(observer); }

 private:
  const crypto::PaillierKeypair& key_;
  std::size_t requests_ = 0;
  Observer observer_;
};

Ordering encrypted_compare(const crypto::PaillierCiphertext& a, const crypto::PaillierCiphertext& b,
                           ComparisonAuthority& ai);

// Linear scan, n-1 queries; on ties the earlier index wins.
std::size_t encrypted_argmax(const std::vector<crypto::PaillierCiphertext>& values,
                             ComparisonAuthority& ai);

// Selected operand, rerandomized so the caller cannot link it to its input.
crypto::PaillierCiphertext encrypted_max(const crypto::PaillierCiphertext& a,
                                         const crypto::PaillierCiphertext& b,
                                         ComparisonAuthority& ai, Rng& rng);
crypto::PaillierCiphertext encrypted_min(const crypto::PaillierCiphertext& a,
                                         const crypto::PaillierCiphertext& b,
                                         ComparisonAuthority& ai, Rng& rng);

}  // namespace pvi::secure
