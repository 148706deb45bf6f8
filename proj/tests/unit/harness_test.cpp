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

#include <algorithm>
#include <cmath>

#include "pvi/common/errors.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/harness/campaigns.hpp"
#include "pvi/harness/generator.hpp"
#include "pvi/harness/overhead.hpp"
#include "pvi/mech/mechanisms.hpp"
#include "pvi/protocol/pvi_s.hpp"
#include "pvi/protocol/setup.hpp"

namespace pvi::harness {
namespace {

using mech::JobModel;

const protocol::SystemSetup& setup() {
  static const protocol::SystemSetup s{protocol::SetupOptions{}};
  return s;
}

TEST(Generator, ProfilesRespectTheShape) {
  Rng rng(1);
  InstanceShape shape{JobModel::kSubmodular, 30, 6, {1, 2, 3}, {1}, mpq_class(1, 5)};
  auto p = generate_profiles(shape, rng);
  ASSERT_EQ(p.size(), 30u);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_EQ(p[i].user_id, i + 1);
    EXPECT_FALSE(p[i].assignments.empty());
    for (auto a : p[i].assignments) EXPECT_LT(a, 6u);
  }
  mpq_class b = generate_budget(p, rng);
  EXPECT_GE(b, 1);
  EXPECT_EQ(b.get_den(), 1);
  shape.ground = 0;
  EXPECT_THROW(generate_profiles(shape, rng), DomainError);
}

TEST(Generator, SameSeedSameInstance) {
  CampaignSpec spec{JobModel::kHeterogeneous, 5, 10, 0, {1, 2, 3}, {1, 2}};
  Instance a = make_instance(spec, 3), b = make_instance(spec, 3), c = make_instance(spec, 4);
  EXPECT_EQ(a.profiles, b.profiles);
  EXPECT_EQ(a.config.budget, b.config.budget);
  EXPECT_NE(a.config.seed, c.config.seed);
}

TEST(Slope, RecoversPowerLaws) {
  std::vector<double> x{10, 20, 40, 80}, lin, quad;
  for (double v : x) lin.push_back(3 * v), quad.push_back(v * v + v);
  EXPECT_NEAR(loglog_slope(x, lin), 1.0, 1e-9);
  EXPECT_NEAR(loglog_slope(x, quad), 2.0, 0.05);
}

TEST(Campaigns, OutcomeViolationsSpotsOverspending) {
  std::vector<mech::SensingProfile> p{{1, 2, 1, {}}};
  mech::AuctionOutcome o;
  o.winners = {1};
  o.allocation[1] = 1;
  o.payments[1] = 1;
  EXPECT_FALSE(outcome_violations(p, o, 5).empty());  // below cost
  o.payments[1] = 6;
  EXPECT_FALSE(outcome_violations(p, o, 5).empty());  // over budget
  o.payments[1] = 3;
  EXPECT_TRUE(outcome_violations(p, o, 5).empty());
}

TEST(Campaigns, SmallEquivalenceRuns) {
  CampaignSpec h{JobModel::kHeterogeneous, 6, 6, 0, {1, 2, 3, 4}, {1, 2, 3}};
  std::size_t hooked = 0;
  EquivalenceReport r = cmd_equivalence(setup(), h, [&](const Instance&, const protocol::RunTranscript&) { ++hooked; });
  EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(hooked, 6u);
  CampaignSpec s{JobModel::kSubmodular, 4, 5, 4, {1, 2, 3}};
  EXPECT_TRUE(cmd_equivalence(setup(), s).passed());
}

TEST(Campaigns, TruthfulnessOnSmallGrid) {
  CampaignSpec s{JobModel::kSubmodular, 20, 5, 4, {1, 2, 3, 4}};
  TruthfulnessReport r = cmd_truthfulness(s);
  EXPECT_TRUE(r.passed()) << (r.counterexamples.empty() ? "" : r.counterexamples.front());
  EXPECT_GT(r.deviations, 0u);
}

TEST(Campaigns, VerificationGameRows) {
  std::vector<protocol::VerificationPolicy> grid{{mpq_class(1, 10), 900, 100}, {mpq_class(1, 20), 900, 100}};
  auto rows = cmd_verification_game(grid, 100, 10000, 3);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].closed_form, 0);
  EXPECT_EQ(rows[1].closed_form, 50);
  EXPECT_TRUE(rows[0].deterred());
  EXPECT_FALSE(rows[1].deterred());
  std::string csv = game_csv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST(Overhead, CountersAreConserved) {
  std::vector<mech::SensingProfile> users{{1, 1, 1, {0, 1}}, {2, 1, 1, {1, 2}}, {3, 1, 1, {2}}};
  auto cfg = protocol::default_config(JobModel::kSubmodular, 4, {1, 2}, {1}, 3);
  protocol::RunTranscript tr = protocol::run_protocol(setup(), cfg, users);
  EXPECT_EQ(tr.counters().total_bytes_sent(), tr.counters().total_bytes_received());
  std::uint64_t from_messages = 0;
  for (const auto& m : tr.messages()) from_messages += m.bytes;
  EXPECT_EQ(from_messages, tr.counters().total_bytes_sent());
  auto rows = metrics_rows("abc", tr);
  EXPECT_FALSE(rows.empty());
  std::string csv = metrics_csv(rows);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rows.size() + 1);
}

TEST(Overhead, SweepProducesSlopes) {
  OverheadSpec spec;
  spec.users = {4, 6, 8, 10};
  spec.bids = {1, 2, 3};
  OverheadReport r = cmd_overhead(setup(), spec);
  EXPECT_EQ(r.points.size(), 4u);
  EXPECT_NEAR(r.slope("sort_ops"), 2.0, 0.3);
  EXPECT_FALSE(r.summary().empty());
  spec.users = {1, 2};
  EXPECT_THROW(cmd_overhead(setup(), spec), UsageError);
}

}  // namespace
}  // namespace pvi::harness
