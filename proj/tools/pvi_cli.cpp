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
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"
#include "pvi/harness/campaigns.hpp"
#include "pvi/harness/generator.hpp"
#include "pvi/harness/overhead.hpp"
#include "pvi/mech/mechanisms.hpp"
#include "pvi/mech/text_format.hpp"
#include "pvi/protocol/pvi_s.hpp"
#include "pvi/protocol/scenario.hpp"

namespace {

using namespace pvi;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Flags {
  std::string spec;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<std::size_t> trials;
  std::string model;
};

protocol::Scenario load(const Flags& f) {
  if (f.spec.empty()) throw UsageError("--spec is required");
  protocol::Scenario sc = protocol::load_scenario(f.spec);
  if (!f.model.empty()) sc.config.model = mech::parse_job_model(f.model);
  if (f.seed) {
    sc.config.seed = *f.seed;
    sc.setup.seed = *f.seed;
  }
  if (f.trials) sc.trials = *f.trials;
  return sc;
}

void header(std::ostream& os, const Flags& f, const protocol::Scenario& sc) {
  os << "# spec " << f.spec << " seed " << sc.config.seed << "\n";
  std::istringstream in(sc.source);
  for (std::string line; std::getline(in, line);) os << "#   " << line << "\n";
}

void write_file(const Flags& f, const std::string& name, const std::string& content) {
  if (f.out.empty()) return;
  std::filesystem::create_directories(f.out);
  std::ofstream(std::filesystem::path(f.out) / name) << content;
}

harness::CampaignSpec campaign(const protocol::Scenario& sc) {
  harness::CampaignSpec c;
  c.model = sc.config.model;
  c.instances = sc.trials ? sc.trials : 100;
  c.max_users = sc.users.empty() ? 10 : sc.users.front();
  c.max_ground = sc.config.ground_size;
  c.bids = sc.config.bid_domain;
  c.limits = sc.config.limit_domain;
  c.inclusion = sc.inclusion;
  if (sc.config.budget > 0) c.budget = sc.config.budget;
  c.seed = sc.config.seed;
  return c;
}

int cmd_equivalence(const Flags& f) {
  protocol::Scenario sc = load(f);
  header(std::cout, f, sc);
  protocol::SystemSetup setup(sc.setup);
  harness::EquivalenceReport rep = harness::cmd_equivalence(setup, campaign(sc));
  std::cout << "instances " << rep.instances << " matches " << rep.matches << " privacy_clean "
            << rep.privacy_clean << " property_violations " << rep.property_violations << " audits "
            << rep.audits << " discrepancies " << rep.discrepancies << " seconds " << rep.seconds << "\n";
  for (const auto& s : rep.failures) std::cout << s << "\n";
  return rep.passed() ? kOk : kViolation;
}

int cmd_truthfulness(const Flags& f) {
  protocol::Scenario sc = load(f);
  header(std::cout, f, sc);
  harness::TruthfulnessReport rep = harness::cmd_truthfulness(campaign(sc));
  std::cout << "instances " << rep.instances << " deviations " << rep.deviations << " profitable "
            << rep.profitable << " property_violations " << rep.property_violations << "\n";
  for (const auto& s : rep.counterexamples) std::cout << s << "\n";
  return rep.passed() ? kOk : kViolation;
}

int cmd_game(const Flags& f) {
  std::vector<protocol::VerificationPolicy> grid;
  std::uint64_t seed = f.seed.value_or(1);
  if (!f.spec.empty()) {
    protocol::Scenario sc = load(f);
    header(std::cout, f, sc);
    grid.push_back(sc.config.verification);
    seed = sc.config.seed;
  } else {
    for (mpq_class a : {mpq_class(1, 20), mpq_class(1, 10), mpq_class(1, 5), mpq_class(1)})
      grid.push_back({a, 900, 100});
  }
  std::size_t trials = f.trials.value_or(100000);
  auto rows = harness::cmd_verification_game(grid, grid.front().p_max, trials, seed);
  std::string csv = harness::game_csv(rows);
  std::cout << csv;
  write_file(f, "game.csv", csv);
  for (const auto& r : rows)
    if (r.policy.alpha >= protocol::VerificationPolicy::threshold(r.policy.fine, r.policy.p_max) &&
        !r.deterred())
      return kViolation;
  return kOk;
}

int cmd_overhead(const Flags& f) {
  protocol::Scenario sc = load(f);
  header(std::cout, f, sc);
  harness::OverheadSpec spec;
  spec.model = sc.config.model;
  spec.users = sc.users;
  spec.grounds = sc.grounds;
  spec.bids = sc.config.bid_domain;
  spec.limits = sc.config.limit_domain;
  spec.inclusion = sc.inclusion;
  if (sc.config.budget > 0) spec.budget = sc.config.budget;
  spec.seed = sc.config.seed;
  protocol::SystemSetup setup(sc.setup);
  harness::OverheadReport rep = harness::cmd_overhead(setup, spec);
  std::string csv = harness::metrics_csv(rep.rows);
  write_file(f, "metrics.csv", csv);
  if (f.out.empty()) std::cout << csv;
  std::cout << rep.summary();
  return kOk;
}

int cmd_run(const Flags& f) {
  protocol::Scenario sc = load(f);
  header(std::cout, f, sc);
  std::vector<mech::SensingProfile> profiles = sc.profiles;
  if (profiles.empty()) {
    harness::InstanceShape shape;
    shape.model = sc.config.model;
    shape.users = sc.users.empty() ? 0 : sc.users.front();
    shape.ground = sc.config.ground_size;
    shape.bids = sc.config.bid_domain;
    shape.limits = sc.config.limit_domain;
    shape.inclusion = sc.inclusion;
    Rng rng(sc.config.seed);
    profiles = harness::generate_profiles(shape, rng);
  }
  protocol::SystemSetup setup(sc.setup);
  protocol::RunTranscript tr = protocol::run_protocol(setup, sc.config, profiles);
  mech::AuctionOutcome expected =
      mech::run_mechanism(sc.config.model, profiles, sc.config.budget, sc.config.ground_size);
  std::string outcome = mech::format_outcome(tr.outcome);
  std::cout << outcome;
  for (const auto& line : tr.log) std::cout << "# " << line << "\n";
  write_file(f, "outcome.txt", outcome);
  write_file(f, "board.txt", tr.board->dump());
  write_file(f, "counters.csv", harness::metrics_csv(harness::metrics_rows("run", tr)));
  bool ok = tr.outcome == expected && tr.discrepancies() == 0 && protocol::scan_privacy(tr).clean();
  std::cout << "oracle " << (tr.outcome == expected ? "match" : "MISMATCH") << " audits " << tr.audits.size()
            << " discrepancies " << tr.discrepancies() << "\n";
  return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving verifiable crowd-sensing auctions"};
  app.require_subcommand(1);
  Flags flags;
  auto add_flags = [&](CLI::App* sub) {
    sub->add_option("--spec", flags.spec, "scenario file");
    sub->add_option("--seed", flags.seed, "override the scenario seed");
    sub->add_option("--out", flags.out, "output directory");
    sub->add_option("--trials", flags.trials, "instances or Monte Carlo trials");
    sub->add_option("--model", flags.model, "h | het | sub");
  };
  std::map<std::string, int (*)(const Flags&)> commands{{"equivalence", cmd_equivalence},
                                                        {"truthfulness", cmd_truthfulness},
                                                        {"game", cmd_game},
                                                        {"overhead", cmd_overhead},
                                                        {"run", cmd_run}};
  std::map<std::string, std::string> help{
      {"equivalence", "protocol against plaintext mechanism on generated instances"},
      {"truthfulness", "exhaustive unilateral bid deviations"},
      {"game", "verification game Monte Carlo"},
      {"overhead", "message and operation counts over a size sweep"},
      {"run", "one scenario; writes board dump, counters and outcome"}};
  for (const auto& [name, fn] : commands) add_flags(app.add_subcommand(name, help[name]));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    for (const auto& [name, fn] : commands)
      if (app.got_subcommand(name)) return fn(flags);
  } catch (const pvi::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pvi::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const pvi::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
