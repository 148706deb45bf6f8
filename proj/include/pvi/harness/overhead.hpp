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
#include <optional>
#include <string>
#include <vector>

#include "pvi/mech/profile.hpp"
#include "pvi/protocol/bus.hpp"
#include "pvi/protocol/setup.hpp"
#include "pvi/protocol/transcript.hpp"

namespace pvi::harness {

struct MetricsRow {
  std::string scenario;
  protocol::PartyId party;
  protocol::Phase phase = protocol::Phase::kSetup;
  protocol::PartyPhaseCounters counters;
  double wall_seconds = 0;  // of the whole run
};

std::vector<MetricsRow> metrics_rows(const std::string& scenario, const protocol::RunTranscript& tr);
std::string metrics_csv(const std::vector<MetricsRow>& rows);

// Least-squares slope of log y against log x. Throws DomainError with fewer
// than two points or a nonpositive coordinate.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

struct OverheadSpec {
  mech::JobModel model = mech::JobModel::kHomogeneous;
  std::vector<std::size_t> users;   // sweep over n at fixed m ...
  std::vector<std::size_t> grounds; // ... or over m at fixed n
  std::vector<mpq_class> bids;
  std::vector<mpq_class> limits{1};
  mpq_class inclusion{2, 5};
  std::optional<mpq_class> budget;  // a quarter of the total ask when absent
  std::uint64_t seed = 1;
};

struct SweepPoint {
  std::size_t users = 0;
  std::size_t ground = 0;
  std::uint64_t platform_winner_bytes = 0;
  std::uint64_t platform_bytes = 0;
  std::uint64_t user_bytes = 0;
  std::uint64_t ai_bytes = 0;
  std::uint64_t sort_ops = 0;
  std::uint64_t board_entries = 0;
  std::uint64_t board_bytes = 0;
  std::size_t winners = 0;
  double wall_seconds = 0;
};

struct Slope {
  std::string metric;
  double value = 0;
};

struct OverheadReport {
  std::vector<SweepPoint> points;
  std::vector<MetricsRow> rows;
  std::vector<Slope> slopes;
  bool over_users = true;

  double slope(const std::string& metric) const;
  std::string summary() const;
};

// At least four sweep sizes. One run per size.
OverheadReport cmd_overhead(const protocol::SystemSetup& setup, const OverheadSpec& spec);

}  // namespace pvi::harness
