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
#include "pvi/protocol/setup.hpp"

namespace pvi::protocol {

SystemSetup::SystemSetup(SetupOptions options) : options_(options) {
  Rng rng(options_.seed);
  group_ = crypto::generate_group(options_.group_bits, options_.subgroup_bits, rng);
  platform_key_ = crypto::paillier_keygen(options_.paillier_bits, rng);
  ai_key_ = crypto::paillier_keygen(options_.paillier_bits, rng);
  platform_signing_ = crypto::generate_signing_key(group_, rng);
  ai_signing_ = crypto::generate_signing_key(group_, rng);
  mpep_signing_ = crypto::generate_signing_key(group_, rng);
}

const crypto::SigningKey& SystemSetup::user_signing(mech::UserId id) const {
  std::lock_guard lock(mu_);
  auto& slot = user_keys_[id];
  if (!slot) {
    Rng rng(options_.seed * 0x9e3779b97f4a7c15ULL + id + 1);
    slot = std::make_unique<crypto::SigningKey>(crypto::generate_signing_key(group_, rng));
  }
  return *slot;
}

}  // namespace pvi::protocol
