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
// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pvi/common/rng.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/blind_nr.hpp"
#include "pvi/crypto/ot.hpp"
#include "pvi/crypto/paillier.hpp"
#include "pvi/harness/campaigns.hpp"
#include "pvi/harness/generator.hpp"
#include "pvi/harness/overhead.hpp"
#include "pvi/mech/mechanisms.hpp"
#include "pvi/protocol/pvi_s.hpp"
#include "pvi/protocol/setup.hpp"

namespace {

using namespace pvi;
using mech::JobModel;

constexpr std::uint64_t kSeed = 20261015;

struct Verdict {
  bool pass = true;
  std::string detail;
};

std::vector<mpq_class> range_domain(long lo, long hi) {
  std::vector<mpq_class> out;
  for (long v = lo; v <= hi; ++v) out.emplace_back(v);
  return out;
}

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Shared between criteria 1, 3 and 7.
struct PrivacyTally {
  std::size_t runs = 0;
  std::size_t cross_user = 0;
  std::size_t early = 0;
  std::size_t h_runs = 0;
  std::size_t h_failing_records = 0;
  std::size_t h_linked = 0;
};

struct EquivalenceResults {
  std::vector<harness::EquivalenceReport> reports;
  PrivacyTally privacy;
  double seconds = 0;
};

EquivalenceResults run_equivalence(const protocol::SystemSetup& setup) {
  EquivalenceResults out;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<harness::CampaignSpec> specs{
      {JobModel::kHomogeneous, 500, 20, 0, range_domain(1, 10), {1}, mpq_class(2, 5), std::nullopt, kSeed},
      {JobModel::kHeterogeneous, 500, 20, 0, range_domain(1, 10), range_domain(1, 4), mpq_class(2, 5), std::nullopt,
       kSeed + 1},
      {JobModel::kSubmodular, 200, 12, 8, range_domain(1, 5), {1}, mpq_class(2, 5), std::nullopt, kSeed + 2},
  };
  PrivacyTally& p = out.privacy;
  auto hook = [&](const harness::Instance&, const protocol::RunTranscript& tr) {
    protocol::PrivacyReport r = protocol::scan_privacy(tr);
    ++p.runs;
    p.cross_user += r.cross_user_leaks;
    p.early += r.early_decommitments;
    if (tr.config.model != JobModel::kSubmodular) {
      ++p.h_runs;
      p.h_failing_records += tr.failing_rank ? 1 : 0;
      p.h_linked += r.identity_linked_failing_records;
    }
  };
  for (const auto& spec : specs) out.reports.push_back(harness::cmd_equivalence(setup, spec, hook));
  out.seconds = elapsed(t0);
  return out;
}

Verdict criterion1(const EquivalenceResults& eq) {
  Verdict v;
  const char* names[] = {"homogeneous", "heterogeneous", "submodular"};
  for (std::size_t k = 0; k < eq.reports.size(); ++k) {
    const auto& r = eq.reports[k];
    v.pass = v.pass && r.matches == r.instances && r.failures.empty();
    v.detail += fmt("%s %zu/%zu; ", names[k], r.matches, r.instances);
    if (!r.failures.empty()) std::fprintf(stderr, "criterion 1 failure: %s\n", r.failures.front().c_str());
  }
  v.pass = v.pass && eq.seconds < 300;
  v.detail += fmt("%.1f s", eq.seconds);
  return v;
}

std::vector<harness::TruthfulnessReport> run_truthfulness(double& seconds) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<harness::CampaignSpec> specs{
      {JobModel::kHomogeneous, 200, 8, 0, range_domain(1, 8), {1}, mpq_class(2, 5), std::nullopt, kSeed + 10},
      {JobModel::kHeterogeneous, 200, 8, 0, range_domain(1, 8), range_domain(1, 4), mpq_class(2, 5), std::nullopt,
       kSeed + 11},
      {JobModel::kSubmodular, 200, 7, 6, range_domain(1, 8), {1}, mpq_class(2, 5), std::nullopt, kSeed + 12},
  };
  std::vector<harness::TruthfulnessReport> out;
  for (const auto& s : specs) out.push_back(harness::cmd_truthfulness(s));
  seconds = elapsed(t0);
  return out;
}

Verdict criterion2(const std::vector<harness::TruthfulnessReport>& reps, double seconds) {
  Verdict v;
  std::size_t deviations = 0, profitable = 0;
  for (const auto& r : reps) {
    deviations += r.deviations;
    profitable += r.profitable;
    if (!r.counterexamples.empty()) std::fprintf(stderr, "criterion 2 counterexample: %s\n", r.counterexamples.front().c_str());
  }
  v.pass = profitable == 0 && seconds < 120;
  v.detail = fmt("%zu deviations over 600 instances, %zu profitable, %.1f s", deviations, profitable, seconds);
  return v;
}

Verdict criterion3(const EquivalenceResults& eq, const std::vector<harness::TruthfulnessReport>& tr) {
  std::size_t bad = 0, outcomes = 0;
  for (const auto& r : eq.reports) bad += r.property_violations, outcomes += r.instances;
  for (const auto& r : tr) bad += r.property_violations, outcomes += r.instances;
  return {bad == 0, fmt("%zu budget or rationality violations over %zu outcomes", bad, outcomes)};
}

Verdict criterion4(const protocol::SystemSetup& setup) {
  Rng rng(kSeed + 4);
  const crypto::PaillierKeypair& key = setup.platform_key();
  const crypto::PaillierPublicKey& pk = key.pub();
  std::size_t paillier_bad = 0;
  for (int t = 0; t < 10000; ++t) {
    mpz_class a = rng.below(pk.n()), b = rng.below(pk.n()), k = rng.below(pk.n());
    auto ca = pk.encrypt(a, rng), cb = pk.encrypt(b, rng);
    if (key.decrypt(pk.add(ca, cb)) != crypto::mod(a + b, pk.n())) ++paillier_bad;
    if (key.decrypt(pk.scale(ca, k)) != crypto::mod(a * k, pk.n())) ++paillier_bad;
  }
  const crypto::GroupParams& g = setup.group();
  std::size_t ot_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t z = 1 + rng.below_u64(16);
    std::vector<mpz_class> msgs;
    for (std::size_t i = 0; i < z; ++i) msgs.push_back(crypto::powm(g.g, 1 + rng.below(g.q - 1), g.p));
    std::size_t choice = 1 + rng.below_u64(z);
    if (crypto::ot_transfer(msgs, choice, g, rng) != msgs[choice - 1]) ++ot_bad;
  }
  std::size_t sig_bad = 0, tamper_accepted = 0;
  crypto::SigningKey signer = crypto::generate_signing_key(g, rng);
  for (int t = 0; t < 1000; ++t) {
    mpz_class m = 1 + rng.below(g.q - 1);
    crypto::BlindSignature sig = crypto::blind_sign(g, signer, m, rng);
    if (!crypto::blind_verify(g, signer.y, m, sig)) ++sig_bad;
    auto flip = [&](const mpz_class& x, const mpz_class& bound) {
      mpz_class y = x;
      mpz_combit(y.get_mpz_t(), rng.below_u64(crypto::bit_length(bound) - 1));
      return y;
    };
    crypto::BlindSignature bad_s{sig.r, flip(sig.s, g.q)}, bad_r{flip(sig.r, g.p), sig.s};
    if (crypto::blind_verify(g, signer.y, m, bad_s)) ++tamper_accepted;
    if (crypto::blind_verify(g, signer.y, m, bad_r)) ++tamper_accepted;
    if (crypto::blind_verify(g, signer.y, flip(m, g.q), sig)) ++tamper_accepted;
  }
  return {paillier_bad == 0 && ot_bad == 0 && sig_bad == 0 && tamper_accepted == 0,
          fmt("paillier 20000 identities, %zu wrong; OT 1000 transfers, %zu wrong; blind signatures "
              "1000, %zu rejected, %zu of 3000 tampered accepted",
              paillier_bad, ot_bad, sig_bad, tamper_accepted)};
}

Verdict criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<protocol::VerificationPolicy> grid{{mpq_class(1, 10), 900, 100}, {mpq_class(1, 20), 900, 100}};
  auto rows = harness::cmd_verification_game(grid, 100, 100000, kSeed + 5);
  double s = elapsed(t0);
  const auto& a = rows[0].estimate;
  const auto& b = rows[1].estimate;
  bool ok_a = std::abs(a.mean) <= 3 * a.std_error && a.mean <= 3 * a.std_error;
  bool ok_b = std::abs(b.mean - 50) <= 3 * b.std_error;
  return {ok_a && ok_b && s < 30,
          fmt("alpha=0.1 mean %.3f (se %.3f, closed form %s); alpha=0.05 mean %.3f (se %.3f, closed form %s); %.2f s",
              a.mean, a.std_error, rows[0].closed_form.get_str().c_str(), b.mean, b.std_error,
              rows[1].closed_form.get_str().c_str(), s)};
}

Verdict criterion6(const protocol::SystemSetup& setup) {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t injected = 0, flagged = 0;
  for (std::size_t id = 0; injected < 100; ++id) {
    JobModel model = id % 2 ? JobModel::kSubmodular : JobModel::kHeterogeneous;
    harness::CampaignSpec spec{model, 0, 8, 5, range_domain(1, 5), range_domain(1, 3), mpq_class(2, 5), std::nullopt,
                               kSeed + 6};
    harness::Instance inst = harness::make_instance(spec, id);
    if (mech::run_mechanism(model, inst.profiles, inst.config.budget, inst.config.ground_size).empty()) continue;
    protocol::RunOptions o;
    o.misbehavior.kind = protocol::Misbehavior::Kind::kUnderpay;
    o.misbehavior.delta = mpq_class(1, 2);
    o.audit_probability = 1;
    protocol::RunTranscript tr = protocol::run_protocol(setup, inst.config, inst.profiles, o);
    ++injected;
    const mech::UserId victim = tr.outcome.winners.front();
    for (const auto& a : tr.audits)
      if (a.user == victim && !a.result.confirmed()) {
        ++flagged;
        break;
      }
  }
  // Audit coin frequency over 10^4 honest runs at the policy's alpha.
  std::size_t coins = 0, audits = 0;
  mpq_class alpha;
  for (std::size_t id = 0; id < 10000; ++id) {
    Rng rng(kSeed + 600000 + id);
    harness::InstanceShape shape{JobModel::kHomogeneous, 2, 0, range_domain(1, 5)};
    auto profiles = harness::generate_profiles(shape, rng);
    auto cfg = protocol::default_config(JobModel::kHomogeneous, harness::generate_budget(profiles, rng),
                                        range_domain(1, 5), {1}, 0, rng.next_u64());
    alpha = cfg.verification.alpha;
    protocol::RunTranscript tr = protocol::run_protocol(setup, cfg, profiles);
    coins += profiles.size();
    audits += tr.audits.size();
  }
  double p = alpha.get_d(), n = static_cast<double>(coins);
  double sigma = std::sqrt(n * p * (1 - p));
  double dev = std::abs(static_cast<double>(audits) - n * p);
  return {flagged == injected && dev <= 3 * sigma,
          fmt("%zu/%zu underpayments flagged; %zu audits from %zu coins at alpha %.3f (expected %.0f, 3 sigma %.1f); %.1f s",
              flagged, injected, audits, coins, p, n * p, 3 * sigma, elapsed(t0))};
}

Verdict criterion7(const PrivacyTally& p) {
  return {p.cross_user == 0 && p.early == 0 && p.h_linked == 0,
          fmt("%zu runs: %zu cross-user leaks, %zu early decommitments; %zu PVI-H runs, %zu failing-rank records, "
              "%zu identity-linked",
              p.runs, p.cross_user, p.early, p.h_runs, p.h_failing_records, p.h_linked)};
}

Verdict criterion8(const protocol::SystemSetup& setup) {
  harness::OverheadSpec h;
  h.model = JobModel::kHomogeneous;
  h.users = {10, 20, 40, 80, 160};
  h.bids = range_domain(1, 10);
  h.seed = kSeed + 8;
  harness::OverheadReport hr = harness::cmd_overhead(setup, h);
  double send = hr.slope("platform_bytes"), sort = hr.slope("sort_ops");

  harness::OverheadSpec s;
  s.model = JobModel::kSubmodular;
  s.users = {10, 20, 40, 80};
  s.grounds = {10};
  s.bids = range_domain(1, 5);
  s.seed = kSeed + 8;
  harness::OverheadReport sr = harness::cmd_overhead(setup, s);

  Rng rng(kSeed + 9);
  harness::InstanceShape shape{JobModel::kSubmodular, 100, 50, range_domain(1, 5)};
  auto profiles = harness::generate_profiles(shape, rng);
  auto cfg = protocol::default_config(JobModel::kSubmodular, 40, range_domain(1, 5), {1}, 50, kSeed + 9);
  auto t0 = std::chrono::steady_clock::now();
  protocol::RunTranscript big = protocol::run_protocol(setup, cfg, profiles);
  double big_s = elapsed(t0);
  bool big_ok = big.outcome == mech::run_submodular(profiles, 40, 50);

  bool ok = std::abs(send - 1) <= 0.3 && std::abs(sort - 2) <= 0.3 && big_s < 60 && big_ok;
  return {ok, fmt("PVI-H platform send slope %.3f, sorting slope %.3f; PVI-S at m=10 platform send slope %.3f "
                  "(winner selection %.3f); PVI-S n=100 m=50 run %.1f s, %zu winners, oracle %s",
                  send, sort, sr.slope("platform_bytes"), sr.slope("platform_winner_bytes"), big_s,
                  big.outcome.winners.size(), big_ok ? "match" : "MISMATCH")};
}

}  // namespace

int main() {
  const protocol::SystemSetup setup{protocol::SetupOptions{}};
  std::vector<std::pair<int, Verdict>> verdicts;
  auto report = [&](int k, Verdict v) {
    std::printf("%s criterion %d: %s\n", v.pass ? "PASS" : "FAIL", k, v.detail.c_str());
    std::fflush(stdout);
    verdicts.emplace_back(k, std::move(v));
  };

  EquivalenceResults eq = run_equivalence(setup);
  report(1, criterion1(eq));
  double truth_s = 0;
  auto truth = run_truthfulness(truth_s);
  report(2, criterion2(truth, truth_s));
  report(3, criterion3(eq, truth));
  report(4, criterion4(setup));
  report(5, criterion5());
  report(6, criterion6(setup));
  report(7, criterion7(eq.privacy));
  report(8, criterion8(setup));

  for (const auto& [k, v] : verdicts)
    if (!v.pass) return 1;
  return 0;
}
