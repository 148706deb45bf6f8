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
#include <gtest/gtest.h>

#include "pvi/board/bulletin.hpp"
#include "pvi/common/errors.hpp"
#include "pvi/mech/mechanisms.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/game.hpp"
#include "pvi/protocol/pvi_h.hpp"
#include "pvi/protocol/pvi_s.hpp"
#include "pvi/protocol/scenario.hpp"
#include "pvi/protocol/setup.hpp"

namespace pvi::protocol {
namespace {

using mech::JobModel;
using mech::SensingProfile;

const SystemSetup& setup() {
  static const SystemSetup s{SetupOptions{}};
  return s;
}

std::vector<SensingProfile> h_users(const std::vector<long>& bids, std::vector<std::uint32_t> limits = {}) {
  std::vector<SensingProfile> out;
  for (std::size_t i = 0; i < bids.size(); ++i)
    out.push_back({static_cast<mech::UserId>(i + 1), bids[i], limits.empty() ? 1u : limits[i], {}});
  return out;
}

std::vector<SensingProfile> abc_users() {
  return {{1, 1, 1, {0, 1}}, {2, 1, 1, {1, 2}}, {3, 1, 1, {2}}};
}

AuctionConfig h_config(const mpq_class& budget, JobModel model = JobModel::kHomogeneous) {
  std::vector<mpq_class> limits{1};
  if (model == JobModel::kHeterogeneous) limits = {1, 2, 3};
  return default_config(model, budget, {1, 2, 3, 4, 5}, limits);
}

AuctionConfig s_config(const mpq_class& budget, std::size_t ground = 3) {
  return default_config(JobModel::kSubmodular, budget, {1, 2, 3}, {1}, ground);
}

RunOptions audit_all() {
  RunOptions o;
  o.audit_probability = 1;
  return o;
}

TEST(PviH, MatchesMechanismAndVerifies) {
  auto users = h_users({1, 2, 3, 4});
  RunTranscript tr = run_pvi_h(setup(), h_config(6), users, audit_all());
  EXPECT_EQ(tr.outcome, mech::run_homogeneous(users, 6));
  EXPECT_EQ(tr.outcome.payment_of(1), 3);
  EXPECT_EQ(tr.audits.size(), 4u);
  EXPECT_EQ(tr.discrepancies(), 0u);
  EXPECT_EQ(tr.fines, 0);
  EXPECT_TRUE(tr.board->replay_verify());
  EXPECT_TRUE(scan_privacy(tr).clean());
  EXPECT_EQ(tr.failing_rank, std::optional<std::size_t>(3));
}

TEST(PviH, HeterogeneousMatchesMechanism) {
  auto users = h_users({1, 2, 3}, {3, 2, 1});
  RunTranscript tr = run_pvi_h(setup(), h_config(8, JobModel::kHeterogeneous), users, audit_all());
  EXPECT_EQ(tr.outcome, mech::run_heterogeneous(users, 8));
  EXPECT_EQ(tr.outcome.total_payment(), 6);
  EXPECT_EQ(tr.discrepancies(), 0u);
}

TEST(PviH, LoserAuditConfirmsZero) {
  RunTranscript tr = run_pvi_h(setup(), h_config(6), h_users({1, 2, 3, 4}), audit_all());
  VerifyResult r = verify_payment(4, tr);
  EXPECT_TRUE(r.confirmed());
  EXPECT_EQ(r.expected, 0);
}

TEST(PviH, UnderpaymentIsCaughtAndFined) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kUnderpay;
  AuctionConfig cfg = h_config(6);
  RunTranscript tr = run_pvi_h(setup(), cfg, h_users({1, 2, 3, 4}), o);
  EXPECT_EQ(tr.outcome.payment_of(1), 2);
  VerifyResult r = verify_payment(1, tr);
  EXPECT_FALSE(r.confirmed());
  EXPECT_EQ(r.expected, 3);
  EXPECT_EQ(r.observed, 2);
  EXPECT_GE(tr.discrepancies(), 1u);
  EXPECT_EQ(tr.fines, cfg.verification.fine * tr.discrepancies());
}

TEST(PviH, DroppedCommitmentIsAppealed) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kDropCommitment;
  o.misbehavior.target = 2;
  AuctionConfig cfg = h_config(6);
  auto users = h_users({1, 2, 3, 4});
  RunTranscript tr = run_pvi_h(setup(), cfg, users, o);
  EXPECT_EQ(tr.appeals_upheld, (std::vector<mech::UserId>{2}));
  EXPECT_EQ(tr.fines, cfg.verification.fine);
  EXPECT_EQ(tr.outcome, mech::run_homogeneous(users, 6));
  EXPECT_EQ(tr.discrepancies(), 0u);
}

// Swapping the first two ranks admits the second user and cuts the price
// from 4 to 3.
TEST(PviH, ForgedRankingIsDetected) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kForgeRank;
  auto users = h_users({1, 4});
  RunTranscript tr = run_pvi_h(setup(), h_config(6), users, o);
  EXPECT_EQ(tr.outcome.payment_of(1), 3);
  VerifyResult r = verify_payment(1, tr);
  EXPECT_FALSE(r.confirmed());
  EXPECT_EQ(r.expected, 4);
}

// A swap inside the winner set leaves every payment unchanged, so audits
// have nothing to flag.
TEST(PviH, HarmlessForgeryPassesAudit) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kForgeRank;
  auto users = h_users({1, 2, 3, 4});
  RunTranscript tr = run_pvi_h(setup(), h_config(6), users, o);
  EXPECT_EQ(tr.outcome.payments, mech::run_homogeneous(users, 6).payments);
  EXPECT_EQ(tr.discrepancies(), 0u);
}

TEST(PviH, NoAuditsWhenAlphaIsZero) {
  RunOptions o;
  o.audit_probability = 0;
  RunTranscript tr = run_pvi_h(setup(), h_config(6), h_users({1, 2, 3, 4}), o);
  EXPECT_TRUE(tr.audits.empty());
  EXPECT_TRUE(verify_payment(1, tr).confirmed());
}

TEST(PviH, RejectsBidsOutsideTheDomain) {
  EXPECT_THROW(run_pvi_h(setup(), h_config(6), h_users({1, 9}), {}), DomainError);
}

TEST(PviS, ThreeUserExample) {
  auto users = abc_users();
  RunTranscript tr = run_pvi_s(setup(), s_config(4), users, audit_all());
  EXPECT_EQ(tr.outcome, mech::run_submodular(users, 4, 3));
  EXPECT_EQ(tr.outcome.payment_of(1), mpq_class(4, 3));
  EXPECT_EQ(tr.outcome.payment_of(2), 1);
  EXPECT_EQ(tr.discrepancies(), 0u);
  EXPECT_TRUE(tr.board->replay_verify());
  PrivacyReport pr = scan_privacy(tr);
  EXPECT_TRUE(pr.clean()) << (pr.details.empty() ? "" : pr.details.front());
}

TEST(PviS, PlatformWinnerListHasOneEntryPerRound) {
  auto users = abc_users();
  RunTranscript tr = run_pvi_s(setup(), s_config(4), users, {});
  std::size_t rounds = tr.outcome.winners.size() + (tr.failing_rank ? 1 : 0);
  EXPECT_EQ(tr.board->read_list(board::platform_winner_list()).entries.size(), rounds);
}

TEST(PviS, ExhaustionWithTwoUsers) {
  std::vector<SensingProfile> users{{1, 1, 1, {0, 1}}, {2, 1, 1, {1, 2}}};
  RunTranscript tr = run_pvi_s(setup(), s_config(4), users, audit_all());
  EXPECT_EQ(tr.outcome.payment_of(1), mpq_class(4, 3));
  EXPECT_EQ(tr.outcome.payment_of(2), mpq_class(4, 3));
  EXPECT_EQ(tr.discrepancies(), 0u);
}

TEST(PviS, SingleUserGetsTheBudget) {
  std::vector<SensingProfile> users{{1, 1, 1, {0}}};
  RunTranscript tr = run_pvi_s(setup(), s_config(1, 1), users, audit_all());
  EXPECT_EQ(tr.outcome.payment_of(1), 1);
  EXPECT_EQ(tr.discrepancies(), 0u);
}

TEST(PviS, ZeroBudgetSelectsNobody) {
  RunTranscript tr = run_pvi_s(setup(), s_config(0), abc_users(), audit_all());
  EXPECT_TRUE(tr.outcome.empty());
  EXPECT_EQ(tr.discrepancies(), 0u);
}

TEST(PviS, UnderpaymentIsCaught) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kUnderpay;
  o.misbehavior.delta = mpq_class(1, 3);
  RunTranscript tr = run_pvi_s(setup(), s_config(4), abc_users(), o);
  VerifyResult r = verify_payment(1, tr);
  EXPECT_FALSE(r.confirmed());
  EXPECT_EQ(r.expected, mpq_class(4, 3));
  EXPECT_EQ(r.observed, 1);
}

TEST(PviS, ForgedRankingIsDetected) {
  RunOptions o = audit_all();
  o.misbehavior.kind = Misbehavior::Kind::kForgeRank;
  RunTranscript tr = run_pvi_s(setup(), s_config(4), abc_users(), o);
  EXPECT_GE(tr.discrepancies(), 1u);
}

TEST(PviS, SilentWinnerWithdraws) {
  RunOptions o;
  o.silent_winner = 1;
  RunTranscript tr = run_pvi_s(setup(), s_config(4), abc_users(), o);
  EXPECT_FALSE(tr.outcome.is_winner(1));
}

TEST(Protocol, DispatchesOnModel) {
  RunTranscript h = run_protocol(setup(), h_config(10), h_users({5}), {});
  EXPECT_EQ(h.outcome.payment_of(1), 10);
  RunTranscript s = run_protocol(setup(), s_config(4), abc_users(), {});
  EXPECT_EQ(s.outcome.winners.size(), 2u);
}

TEST(Policy, ThresholdAndValidation) {
  EXPECT_EQ(VerificationPolicy::threshold(9, 1), mpq_class(1, 10));
  VerificationPolicy p = VerificationPolicy::at_threshold(9, 1);
  EXPECT_NO_THROW(p.validate());
  p.alpha = mpq_class(1, 20);
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(Game, ClosedFormAndEstimate) {
  VerificationPolicy p{mpq_class(1, 2), 9, 1};
  EXPECT_EQ(expected_cheating_utility(p, 1), -4);
  GameEstimate g = cheating_game(p, 1, 20000, 7);
  EXPECT_EQ(g.trials, 20000u);
  EXPECT_NEAR(g.mean, -4.0, 4 * g.std_error + 1e-9);
  EXPECT_THROW(cheating_game(p, 1, 100, 7), UsageError);
}

TEST(Scenario, ParsesKeysAndProfiles) {
  Scenario sc = parse_scenario(
      "model = sub\n"
      "budget = 4   # total\n"
      "bids = 1, 2, 3\n"
      "ground = 3\n"
      "profile = 1 1 0,1\n"
      "profile = 2 1 1,2\n"
      "seed = 11\n");
  EXPECT_EQ(sc.config.model, JobModel::kSubmodular);
  EXPECT_EQ(sc.config.budget, 4);
  EXPECT_EQ(sc.config.ground_size, 3u);
  ASSERT_EQ(sc.profiles.size(), 2u);
  EXPECT_EQ(sc.profiles[1].assignments, (std::vector<std::uint32_t>{1, 2}));
  EXPECT_EQ(sc.setup.seed, 11u);
}

TEST(Scenario, ErrorsNameTheLine) {
  try {
    parse_scenario("model = h\nbudget = 4\nbogus = 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_scenario("model = h\nmodel = h\n"), ParseError);
  EXPECT_THROW(load_scenario("/nonexistent/scenario.txt"), UsageError);
}

}  // namespace
}  // namespace pvi::protocol
