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
#include <string>
#include <vector>

#include "pvi/common/bytes.hpp"
#include "pvi/mech/profile.hpp"

namespace pvi::protocol {

struct VerificationPolicy {
  mpq_class alpha;
  mpq_class fine;
  mpq_class p_max;

  // p_max / (F + p_max)
  static mpq_class threshold(const mpq_class& fine, const mpq_class& p_max);
  // alpha set to the threshold itself.
  static VerificationPolicy at_threshold(const mpq_class& fine, const mpq_class& p_max);
  // Throws DomainError when alpha is outside [threshold, 1].
  void validate() const;
};

struct AuctionConfig {
  std::string tid = "task-1";
  mpq_class budget;
  std::int64_t deadline = 2;  // logical round T
  mech::JobModel model = mech::JobModel::kHomogeneous;
  std::vector<mpq_class> bid_domain;
  std::vector<mpq_class> limit_domain{1};
  std::size_t ground_size = 0;
  VerificationPolicy verification;
  std::uint64_t seed = 1;
  unsigned code_bits = 32;

  void validate() const;
  Bytes serialize() const;
};

// Config with p_max = B, fine = 9B and alpha at its threshold.
AuctionConfig default_config(mech::JobModel model, const mpq_class& budget,
                             std::vector<mpq_class> bid_domain,
                             std::vector<mpq_class> limit_domain = {1},
                             std::size_t ground_size = 0, std::uint64_t seed = 1);

}  // namespace pvi::protocol
