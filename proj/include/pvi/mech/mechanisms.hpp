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

#include <vector>

#include "pvi/mech/coverage.hpp"
#include "pvi/mech/profile.hpp"

namespace pvi::mech {

// Largest k with b_k <= B/k; every winner is paid min(B/k, b_{k+1}).
AuctionOutcome run_homogeneous(const std::vector<SensingProfile>& profiles, const mpq_class& budget);

// Admits users in bid order while b_i (sum_{S} f + l_i) <= B, then pays
// min(B / sum f, b_{k+1}) per job.
AuctionOutcome run_heterogeneous(const std::vector<SensingProfile>& profiles,
                                 const mpq_class& budget);

// Proportional-share greedy over coverage, critical-value payments.
AuctionOutcome run_submodular(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                              const CoverageUtility& utility);
AuctionOutcome run_submodular(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                              std::size_t ground_size);

AuctionOutcome run_mechanism(JobModel model, const std::vector<SensingProfile>& profiles,
                             const mpq_class& budget, std::size_t ground_size = 0);

// Index (into profiles) of the best marginal-per-bid candidate given the
// current cover; ties go to the lowest user_id. Returns npos when none.
std::size_t greedy_pick(const std::vector<SensingProfile>& profiles, const CoverageUtility& utility,
                        const CoverSet& covered, const std::vector<bool>& available);

// Winner set of the submodular mechanism, in admission order, as indices.
std::vector<std::size_t> submodular_winners(const std::vector<SensingProfile>& profiles,
                                            const mpq_class& budget,
                                            const CoverageUtility& utility);

// Critical payment of winner i (index) with everyone but i as candidates.
mpq_class submodular_payment(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                             const CoverageUtility& utility, std::size_t i);

}  // namespace pvi::mech
