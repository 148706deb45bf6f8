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

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "pvi/crypto/group.hpp"
#include "pvi/crypto/paillier.hpp"
#include "pvi/crypto/schnorr.hpp"
#include "pvi/mech/profile.hpp"

namespace pvi::protocol {

struct SetupOptions {
  unsigned group_bits = crypto::kDefaultGroupBits;
  unsigned subgroup_bits = crypto::kDefaultSubgroupBits;
  unsigned paillier_bits = 512;
  std::uint64_t seed = 1;
};

// Long-lived system material shared by every auction of a campaign: group
// parameters, the platform and AI Paillier keys and all signing keys.
class SystemSetup {
 public:
  explicit SystemSetup(SetupOptions options = {});

  const SetupOptions& options() const { return options_; }
  const crypto::GroupParams& group() const { return group_; }
  const crypto::PaillierKeypair& platform_key() const { return platform_key_; }
  const crypto::PaillierKeypair& ai_key() const { return ai_key_; }
  const crypto::SigningKey& platform_signing() const { return platform_signing_; }
  const crypto::SigningKey& ai_signing() const { return ai_signing_; }
  const crypto::SigningKey& mpep_signing() const { return mpep_signing_; }
  // Derived deterministically from the setup seed and the id.
  const crypto::SigningKey& user_signing(mech::UserId id) const;

 private:
  SetupOptions options_;
  crypto::GroupParams group_;
  crypto::PaillierKeypair platform_key_;
  crypto::PaillierKeypair ai_key_;
  crypto::SigningKey platform_signing_;
  crypto::SigningKey ai_signing_;
  crypto::SigningKey mpep_signing_;
  mutable std::mutex mu_;
  mutable std::map<mech::UserId, std::unique_ptr<crypto::SigningKey>> user_keys_;
};

}  // namespace pvi::protocol
