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
#include "pvi/mech/profile.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pvi/common/errors.hpp"

namespace pvi::mech {

std::string_view to_string(JobModel model) {
  switch (model) {
    case JobModel::kHomogeneous: return "homogeneous";
    case JobModel::kHeterogeneous: return "heterogeneous";
    case JobModel::kSubmodular: return "submodular";
  }
  return "unknown";
}

JobModel parse_job_model(std::string_view text) {
  if (text == "h" || text == "homogeneous") return JobModel::kHomogeneous;
  if (text == "het" || text == "heterogeneous") return JobModel::kHeterogeneous;
  if (text == "sub" || text == "submodular") return JobModel::kSubmodular;
  throw ParseError("unknown job model: " + std::string(text));
}

mpq_class AuctionOutcome::payment_of(UserId id) const {
  auto it = payments.find(id);
  return it == payments.end() ? mpq_class(0) : it->second;
}

mpq_class AuctionOutcome::total_payment() const {
  mpq_class sum = 0;
  for (const auto& [id, p] : payments) sum += p;
  return sum;
}

std::vector<std::size_t> bid_order(const std::vector<SensingProfile>& profiles) {
  std::vector<std::size_t> order(profiles.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (profiles[a].bid != profiles[b].bid) return profiles[a].bid < profiles[b].bid;
    return profiles[a].user_id < profiles[b].user_id;
  });
  return order;
}

}  // namespace pvi::mech
