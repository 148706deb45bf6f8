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
#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace pvi::mech {

using UserId = std::uint32_t;

enum class JobModel { kHomogeneous, kHeterogeneous, kSubmodular };

std::string_view to_string(JobModel model);
// Accepts "h", "homogeneous", "het", "heterogeneous", "sub", "submodular".
JobModel parse_job_model(std::string_view text);

struct SensingProfile {
  UserId user_id = 0;
  mpq_class bid;
  std::uint32_t limit = 1;                  // job limit, H-models
  std::vector<std::uint32_t> assignments;   // indices into the ground set, S-model

  bool operator==(const SensingProfile&) const = default;
};

struct AuctionOutcome {
  std::vector<UserId> winners;  // admission order
  std::map<UserId, std::uint32_t> allocation;
  std::map<UserId, mpq_class> payments;
  std::optional<mpq_class> per_job_price;

  bool is_winner(UserId id) const { return payments.contains(id); }
  mpq_class payment_of(UserId id) const;
  mpq_class total_payment() const;
  bool empty() const { return winners.empty(); }
  bool operator==(const AuctionOutcome&) const = default;
};

// Users with equal bids are ordered by user_id.
std::vector<std::size_t> bid_order(const std::vector<SensingProfile>& profiles);

}  // namespace pvi::mech
