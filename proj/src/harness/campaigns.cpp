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
#include "pvi/harness/campaigns.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"
#include "pvi/harness/generator.hpp"
#include "pvi/mech/mechanisms.hpp"
#include "pvi/mech/text_format.hpp"
#include "pvi/protocol/pvi_s.hpp"

namespace pvi::harness {

namespace {

std::size_t uniform_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(mpz_class(static_cast<unsigned long>(hi - lo + 1))).get_ui());
}

std::string describe(const Instance& inst) {
  std::ostringstream os;
  os << "instance " << inst.id << " model " << mech::to_string(inst.config.model) << " budget "
     << format_fraction(inst.config.budget);
  if (inst.config.model == mech::JobModel::kSubmodular) os << " ground " << inst.config.ground_size;
  os << "\n" << mech::format_profiles(inst.profiles, inst.config.model);
  return os.str();
}

mech::AuctionOutcome oracle(const Instance& inst) {
  return mech::run_mechanism(inst.config.model, inst.profiles, inst.config.budget, inst.config.ground_size);
}

mpq_class utility_of(const mech::AuctionOutcome& o, mech::UserId id, const mpq_class& cost) {
  auto a = o.allocation.find(id);
  if (a == o.allocation.end()) return 0;
  return o.payment_of(id) - cost * a->second;
}

}  // namespace

Instance make_instance(const CampaignSpec& spec, std::size_t id) {
  if (spec.max_users == 0) throw DomainError("campaign needs at least one user per instance");
  Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + id);
  Instance inst;
  inst.id = id;
  InstanceShape shape;
  shape.model = spec.model;
  shape.users = uniform_in(rng, 1, spec.max_users);
  shape.ground = spec.model == mech::JobModel::kSubmodular ? uniform_in(rng, 1, spec.max_ground) : 0;
  shape.bids = spec.bids;
  shape.limits = spec.model == mech::JobModel::kHeterogeneous ? spec.limits : std::vector<mpq_class>{1};
  shape.inclusion = spec.inclusion;
  inst.profiles = generate_profiles(shape, rng);
  mpq_class budget = spec.budget ? *spec.budget : generate_budget(inst.profiles, rng);
  inst.config = protocol::default_config(spec.model, budget, spec.bids, shape.limits, shape.ground,
                                         rng.next_u64());
  return inst;
}

std::vector<std::string> outcome_violations(const std::vector<mech::SensingProfile>& profiles,
                                            const mech::AuctionOutcome& outcome,
                                            const mpq_class& budget) {
  std::vector<std::string> out;
  if (outcome.total_payment() > budget)
    out.push_back("total payment " + format_fraction(outcome.total_payment()) + " exceeds budget " +
                  format_fraction(budget));
  for (const auto& p : profiles) {
    if (!outcome.is_winner(p.user_id)) continue;
    if (utility_of(outcome, p.user_id, p.bid) < 0)
      out.push_back("user " + std::to_string(p.user_id) + " is paid below cost");
  }
  return out;
}

EquivalenceReport cmd_equivalence(const protocol::SystemSetup& setup, const CampaignSpec& spec,
                                  const TranscriptHook& hook) {
  auto started = std::chrono::steady_clock::now();
  EquivalenceReport rep;
  for (std::size_t id = 0; id < spec.instances; ++id) {
    Instance inst = make_instance(spec, id);
    ++rep.instances;
    protocol::RunTranscript tr = protocol::run_protocol(setup, inst.config, inst.profiles);
    mech::AuctionOutcome expected = oracle(inst);
    if (tr.outcome == expected) {
      ++rep.matches;
    } else {
      rep.failures.push_back("mismatch on " + describe(inst) + "protocol:\n" +
                             mech::format_outcome(tr.outcome) + "oracle:\n" + mech::format_outcome(expected));
    }
    auto violations = outcome_violations(inst.profiles, tr.outcome, inst.config.budget);
    rep.property_violations += violations.size();
    for (const auto& v : violations) rep.failures.push_back(v + " on instance " + std::to_string(id));
    protocol::PrivacyReport privacy = protocol::scan_privacy(tr);
    rep.set_union_disclosures += privacy.set_union_disclosures;
    if (privacy.clean()) {
      ++rep.privacy_clean;
    } else {
      for (const auto& d : privacy.details) rep.failures.push_back("instance " + std::to_string(id) + ": " + d);
    }
    rep.audits += tr.audits.size();
    rep.discrepancies += tr.discrepancies();
    if (hook) hook(inst, tr);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

TruthfulnessReport cmd_truthfulness(const CampaignSpec& spec) {
  TruthfulnessReport rep;
  for (std::size_t id = 0; id < spec.instances; ++id) {
    Instance inst = make_instance(spec, id);
    ++rep.instances;
    mech::AuctionOutcome truthful = oracle(inst);
    auto violations = outcome_violations(inst.profiles, truthful, inst.config.budget);
    rep.property_violations += violations.size();
    for (const auto& v : violations) rep.counterexamples.push_back(v + "\n" + describe(inst));
    for (std::size_t i = 0; i < inst.profiles.size(); ++i) {
      const mech::SensingProfile& me = inst.profiles[i];
      mpq_class honest = utility_of(truthful, me.user_id, me.bid);
      for (const mpq_class& d : spec.bids) {
        if (d == me.bid) continue;
        ++rep.deviations;
        Instance lie = inst;
        lie.profiles[i].bid = d;
        mpq_class u = utility_of(oracle(lie), me.user_id, me.bid);
        if (u > honest) {
          ++rep.profitable;
          rep.counterexamples.push_back("user " + std::to_string(me.user_id) + " gains " +
                                        format_fraction(u - honest) + " by bidding " + format_fraction(d) +
                                        "\n" + describe(inst));
        }
      }
    }
  }
  return rep;
}

std::vector<GameRow> cmd_verification_game(const std::vector<protocol::VerificationPolicy>& grid,
                                           const mpq_class& cheat_gain, std::size_t trials,
                                           std::uint64_t seed) {
  std::vector<GameRow> rows;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    GameRow row;
    row.policy = grid[k];
    row.cheat_gain = cheat_gain;
    row.closed_form = protocol::expected_cheating_utility(grid[k], cheat_gain);
    row.estimate = protocol::cheating_game(grid[k], cheat_gain, trials, seed + k);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string game_csv(const std::vector<GameRow>& rows) {
  std::ostringstream os;
  os << "alpha,fine,p_max,cheat_gain,closed_form,mean,std_error,trials\n";
  char buf[64];
  for (const GameRow& r : rows) {
    os << format_fraction(r.policy.alpha) << ',' << format_fraction(r.policy.fine) << ','
       << format_fraction(r.policy.p_max) << ',' << format_fraction(r.cheat_gain) << ','
       << format_fraction(r.closed_form) << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,", r.estimate.mean, r.estimate.std_error);
    os << buf << r.estimate.trials << '\n';
  }
  return os.str();
}

}  // namespace pvi::harness
