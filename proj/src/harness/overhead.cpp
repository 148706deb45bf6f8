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
#include "pvi/harness/overhead.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "pvi/common/errors.hpp"
#include "pvi/harness/generator.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/pvi_s.hpp"

namespace pvi::harness {

using protocol::Phase;

std::vector<MetricsRow> metrics_rows(const std::string& scenario, const protocol::RunTranscript& tr) {
  std::vector<protocol::PartyId> parties{protocol::kPlatform, protocol::kAi, protocol::kMpep,
                                         protocol::kBoard};
  for (mech::UserId id : tr.participants) parties.push_back(protocol::user_party(id));
  std::vector<MetricsRow> rows;
  for (const auto& party : parties)
    for (std::size_t ph = 0; ph < protocol::kPhaseCount; ++ph) {
      const auto& c = tr.counters().at(party, static_cast<Phase>(ph));
      bool any = c.messages_sent || c.messages_received;
      for (auto v : c.ops) any = any || v;
      if (!any) continue;
      rows.push_back({scenario, party, static_cast<Phase>(ph), c, tr.wall_seconds});
    }
  return rows;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::ostringstream os;
  os << "scenario,party,phase,messages_sent,bytes_sent,messages_received,bytes_received";
  for (std::size_t k = 0; k < protocol::kOpCount; ++k) os << ',' << protocol::op_name(static_cast<protocol::Op>(k));
  os << ",wall_seconds\n";
  char buf[32];
  for (const MetricsRow& r : rows) {
    os << r.scenario << ',' << r.party << ',' << protocol::phase_name(r.phase) << ','
       << r.counters.messages_sent << ',' << r.counters.bytes_sent << ',' << r.counters.messages_received
       << ',' << r.counters.bytes_received;
    for (auto v : r.counters.ops) os << ',' << v;
    std::snprintf(buf, sizeof buf, ",%.6f", r.wall_seconds);
    os << buf << '\n';
  }
  return os.str();
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("slope needs two or more paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw DomainError("log-log fit needs positive values");
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0) throw DomainError("sweep sizes are all equal");
  return (n * sxy - sx * sy) / denom;
}

double OverheadReport::slope(const std::string& metric) const {
  for (const Slope& s : slopes)
    if (s.metric == metric) return s.value;
  throw UsageError("no slope for " + metric);
}

std::string OverheadReport::summary() const {
  std::ostringstream os;
  os << "sweep over " << (over_users ? "n" : "m") << ":";
  for (const SweepPoint& p : points) os << ' ' << (over_users ? p.users : p.ground);
  os << '\n';
  char buf[96];
  for (const Slope& s : slopes) {
    std::snprintf(buf, sizeof buf, "slope %-24s %.3f\n", s.metric.c_str(), s.value);
    os << buf;
  }
  return os.str();
}

OverheadReport cmd_overhead(const protocol::SystemSetup& setup, const OverheadSpec& spec) {
  OverheadReport rep;
  rep.over_users = spec.users.size() >= spec.grounds.size();
  const auto& sweep = rep.over_users ? spec.users : spec.grounds;
  if (sweep.size() < 4) throw UsageError("an overhead sweep needs at least four sizes");
  const bool sub = spec.model == mech::JobModel::kSubmodular;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    InstanceShape shape;
    shape.model = spec.model;
    shape.users = rep.over_users ? sweep[k] : (spec.users.empty() ? 10 : spec.users.front());
    shape.ground = sub ? (rep.over_users ? (spec.grounds.empty() ? 10 : spec.grounds.front()) : sweep[k]) : 0;
    shape.bids = spec.bids;
    shape.limits = spec.model == mech::JobModel::kHeterogeneous ? spec.limits : std::vector<mpq_class>{1};
    shape.inclusion = spec.inclusion;
    Rng rng(spec.seed + k);
    auto profiles = generate_profiles(shape, rng);
    mpq_class budget;
    if (spec.budget) {
      budget = *spec.budget;
    } else {
      for (const auto& p : profiles) budget += p.bid * p.limit;
      budget /= 4;
    }
    auto config = protocol::default_config(spec.model, budget, spec.bids, shape.limits, shape.ground,
                                           spec.seed + k);
    protocol::RunTranscript tr = protocol::run_protocol(setup, config, profiles);
    const protocol::Counters& c = tr.counters();
    SweepPoint pt;
    pt.users = shape.users;
    pt.ground = shape.ground;
    pt.platform_winner_bytes = c.bytes_sent(protocol::kPlatform, Phase::kWinner);
    for (std::size_t ph = 0; ph < protocol::kPhaseCount; ++ph) {
      Phase phase = static_cast<Phase>(ph);
      pt.platform_bytes += c.bytes_sent(protocol::kPlatform, phase);
      pt.user_bytes += c.bytes_sent_by_prefix("user:", phase);
      pt.ai_bytes += c.bytes_sent(protocol::kAi, phase);
    }
    for (const auto& party : {protocol::kPlatform, protocol::kAi})
      pt.sort_ops += c.total_ops(party, protocol::Op::kSortCompare);
    pt.board_entries = tr.board->size();
    pt.board_bytes = tr.board->payload_bytes();
    pt.winners = tr.outcome.winners.size();
    pt.wall_seconds = tr.wall_seconds;
    rep.points.push_back(pt);
    std::string id = std::string(mech::to_string(spec.model)) + "-n" + std::to_string(shape.users) + "-m" +
                     std::to_string(shape.ground);
    auto rows = metrics_rows(id, tr);
    rep.rows.insert(rep.rows.end(), rows.begin(), rows.end());
  }
  std::vector<double> xs;
  for (const SweepPoint& p : rep.points) xs.push_back(static_cast<double>(rep.over_users ? p.users : p.ground));
  auto fit = [&](const std::string& name, auto field) {
    std::vector<double> ys;
    for (const SweepPoint& p : rep.points) ys.push_back(static_cast<double>(field(p)));
    for (double y : ys)
      if (y <= 0) return;
    rep.slopes.push_back({name, loglog_slope(xs, ys)});
  };
  fit("platform_winner_bytes", [](const SweepPoint& p) { return p.platform_winner_bytes; });
  fit("platform_bytes", [](const SweepPoint& p) { return p.platform_bytes; });
  fit("user_bytes", [](const SweepPoint& p) { return p.user_bytes; });
  fit("ai_bytes", [](const SweepPoint& p) { return p.ai_bytes; });
  fit("sort_ops", [](const SweepPoint& p) { return p.sort_ops; });
  fit("board_entries", [](const SweepPoint& p) { return p.board_entries; });
  fit("board_bytes", [](const SweepPoint& p) { return p.board_bytes; });
  return rep;
}

}  // namespace pvi::harness
