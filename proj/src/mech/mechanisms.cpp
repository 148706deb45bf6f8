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
#include "pvi/mech/mechanisms.hpp"

#include <set>

#include "pvi/common/errors.hpp"

namespace pvi::mech {

namespace {

void check_profiles(const std::vector<SensingProfile>& profiles) {
  std::set<UserId> seen;
  for (const SensingProfile& p : profiles) {
    if (p.bid <= 0) throw DomainError("bids must be positive");
    if (!seen.insert(p.user_id).second) throw DomainError("duplicate user id");
  }
}

mpq_class ratio(std::size_t num, const mpq_class& den) { return mpq_class(num) / den; }

}  // namespace

AuctionOutcome run_homogeneous(const std::vector<SensingProfile>& profiles,
                               const mpq_class& budget) {
  check_profiles(profiles);
  for (const SensingProfile& p : profiles)
    if (p.limit != 1) throw DomainError("homogeneous profiles carry limit 1");
  AuctionOutcome out;
  if (budget <= 0 || profiles.empty()) return out;
  std::vector<std::size_t> order = bid_order(profiles);
  std::size_t k = 0;
  for (std::size_t r = 0; r < order.size(); ++r)
    if (profiles[order[r]].bid * (r + 1) <= budget) k = r + 1;
  if (k == 0) return out;
  mpq_class price = budget / k;
  if (k < order.size() && profiles[order[k]].bid < price) price = profiles[order[k]].bid;
  out.per_job_price = price;
  for (std::size_t r = 0; r < k; ++r) {
    UserId id = profiles[order[r]].user_id;
    out.winners.push_back(id);
    out.allocation[id] = 1;
    out.payments[id] = price;
  }
  return out;
}

AuctionOutcome run_heterogeneous(const std::vector<SensingProfile>& profiles,
                                 const mpq_class& budget) {
  check_profiles(profiles);
  AuctionOutcome out;
  if (budget <= 0 || profiles.empty()) return out;
  std::vector<std::size_t> order = bid_order(profiles);
  std::uint64_t total = 0;
  std::size_t k = 0;
  for (; k < order.size(); ++k) {
    const SensingProfile& p = profiles[order[k]];
    if (p.limit == 0) throw DomainError("job limits must be positive");
    if (p.bid * mpq_class(mpz_class(static_cast<unsigned long>(total + p.limit))) > budget) break;
    // tau_i = floor((B - b_i sum f) / b_i) is at least l_i after admission.
    mpq_class slack = (budget - p.bid * mpq_class(mpz_class(static_cast<unsigned long>(total)))) / p.bid;
    mpz_class tau;
    mpz_fdiv_q(tau.get_mpz_t(), slack.get_num_mpz_t(), slack.get_den_mpz_t());
    std::uint32_t f = tau < p.limit ? static_cast<std::uint32_t>(tau.get_ui()) : p.limit;
    out.winners.push_back(p.user_id);
    out.allocation[p.user_id] = f;
    total += f;
  }
  if (k == 0) return out;
  mpq_class price = budget / mpq_class(mpz_class(static_cast<unsigned long>(total)));
  if (k < order.size() && profiles[order[k]].bid < price) price = profiles[order[k]].bid;
  out.per_job_price = price;
  for (UserId id : out.winners) out.payments[id] = price * out.allocation[id];
  return out;
}

std::size_t greedy_pick(const std::vector<SensingProfile>& profiles, const CoverageUtility& utility,
                        const CoverSet& covered, const std::vector<bool>& available) {
  std::size_t best = static_cast<std::size_t>(-1);
  mpq_class best_value;
  for (std::size_t j = 0; j < profiles.size(); ++j) {
    if (!available[j]) continue;
    mpq_class v = ratio(utility.gain(covered, j), profiles[j].bid);
    if (best == static_cast<std::size_t>(-1) || v > best_value ||
        (v == best_value && profiles[j].user_id < profiles[best].user_id)) {
      best = j;
      best_value = v;
    }
  }
  return best;
}

std::vector<std::size_t> submodular_winners(const std::vector<SensingProfile>& profiles,
                                            const mpq_class& budget,
                                            const CoverageUtility& utility) {
  std::vector<std::size_t> winners;
  if (budget <= 0) return winners;
  CoverSet covered = utility.empty_cover();
  std::vector<bool> available(profiles.size(), true);
  for (;;) {
    std::size_t i = greedy_pick(profiles, utility, covered, available);
    if (i == static_cast<std::size_t>(-1)) break;
    std::size_t gain = utility.gain(covered, i);
    std::size_t after = covered.count() + gain;
    // U_i(S)/b_i >= U(S u i)/B
    if (ratio(gain, profiles[i].bid) < ratio(after, budget)) break;
    winners.push_back(i);
    covered |= utility.set_of(i);
    available[i] = false;
  }
  return winners;
}

mpq_class submodular_payment(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                             const CoverageUtility& utility, std::size_t i) {
  CoverSet covered = utility.empty_cover();
  std::vector<bool> available(profiles.size(), true);
  available[i] = false;
  mpq_class payment = 0;
  for (;;) {
    std::size_t ui = utility.gain(covered, i);
    mpq_class eta = ui == 0 ? mpq_class(0) : ratio(ui, 1) * budget / (covered.count() + ui);
    std::size_t ij = greedy_pick(profiles, utility, covered, available);
    if (ij == static_cast<std::size_t>(-1)) {
      // Every referenced user is admitted: i could still enter last.
      if (eta > payment) payment = eta;
      break;
    }
    std::size_t uij = utility.gain(covered, ij);
    mpq_class term = eta;
    if (uij > 0) {
      mpq_class bij = ratio(ui, 1) * profiles[ij].bid / uij;
      if (bij < term) term = bij;
    }
    if (term > payment) payment = term;
    covered |= utility.set_of(ij);
    available[ij] = false;
    if (uij == 0 || profiles[ij].bid > ratio(uij, 1) * budget / covered.count()) break;
  }
  return payment;
}

AuctionOutcome run_submodular(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                              const CoverageUtility& utility) {
  check_profiles(profiles);
  if (utility.users() != profiles.size()) throw UsageError("utility does not match the profiles");
  AuctionOutcome out;
  if (utility.ground_size() == 0) return out;
  for (std::size_t i = 0; i < profiles.size(); ++i)
    if (utility.set_of(i).none()) throw DomainError("assignment sets must be nonempty");
  for (std::size_t i : submodular_winners(profiles, budget, utility)) {
    UserId id = profiles[i].user_id;
    out.winners.push_back(id);
    out.allocation[id] = 1;
    out.payments[id] = submodular_payment(profiles, budget, utility, i);
  }
  return out;
}

AuctionOutcome run_submodular(const std::vector<SensingProfile>& profiles, const mpq_class& budget,
                              std::size_t ground_size) {
  return run_submodular(profiles, budget, CoverageUtility::from_profiles(ground_size, profiles));
}

AuctionOutcome run_mechanism(JobModel model, const std::vector<SensingProfile>& profiles,
                             const mpq_class& budget, std::size_t ground_size) {
  switch (model) {
    case JobModel::kHomogeneous: return run_homogeneous(profiles, budget);
    case JobModel::kHeterogeneous: return run_heterogeneous(profiles, budget);
    case JobModel::kSubmodular: return run_submodular(profiles, budget, ground_size);
  }
  throw UsageError("unknown job model");
}

}  // namespace pvi::mech
