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

#include <cstddef>
#include <vector>

#include "pvi/mech/coverage.hpp"

namespace pvi::secure {

// One user's contribution for a round: c_{j,k} = 1 iff tau_k is in Gamma_j,
// plus whether the user currently belongs to the evaluated set.
struct IndicatorShare {
  mech::CoverSet bits;
  bool in_set = false;
};

// Aggregates one round of shares. Only per-candidate sums leave the routine.
class MpepAggregator {
 public:
  explicit MpepAggregator(std::vector<IndicatorShare> shares);

  std::size_t set_utility() const { return covered_.count(); }
  // U(S u {i}) - U(S) via c_{k,S} = 1 - prod_j (1 - c_{j,k,S}).
  std::size_t marginal(std::size_t candidate) const;
  std::size_t users() const { return shares_.size(); }

 private:
  std::vector<IndicatorShare> shares_;
  mech::CoverSet covered_;
};

// Throws DomainError for a zero bid and UsageError if the candidate is in S.
mpq_class mpep_marginal_per_bid(const std::vector<IndicatorShare>& shares, std::size_t candidate,
                                const mpq_class& bid);

}  // namespace pvi::secure
