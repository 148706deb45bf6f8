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
#include "pvi/secure/mpep.hpp"

#include "pvi/common/errors.hpp"

namespace pvi::secure {

MpepAggregator::MpepAggregator(std::vector<IndicatorShare> shares) : shares_(std::move(shares)) {
  std::size_t m = shares_.empty() ? 0 : shares_.front().bits.size();
  covered_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    bool none = true;  // prod_j (1 - c_{j,k,S})
    for (const IndicatorShare& s : shares_) {
      if (s.bits.size() != m) throw UsageError("indicator shares disagree on the ground size");
      if (s.in_set && s.bits.test(k)) none = false;
    }
    covered_[k] = !none;
  }
}

std::size_t MpepAggregator::marginal(std::size_t candidate) const {
  const IndicatorShare& c = shares_.at(candidate);
  if (c.in_set) throw UsageError("candidate already belongs to the evaluated set");
  std::size_t with = 0;
  for (std::size_t k = 0; k < covered_.size(); ++k)
    if (covered_.test(k) || c.bits.test(k)) ++with;
  return with - covered_.count();
}

mpq_class mpep_marginal_per_bid(const std::vector<IndicatorShare>& shares, std::size_t candidate,
                                const mpq_class& bid) {
  if (bid == 0) throw DomainError("marginal per bid with a zero bid");
  MpepAggregator agg(shares);
  return mpq_class(agg.marginal(candidate)) / bid;
}

}  // namespace pvi::secure
