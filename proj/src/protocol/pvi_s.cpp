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
#include "pvi/protocol/pvi_s.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "internal.hpp"
#include "pvi/common/errors.hpp"
#include "pvi/crypto/opes.hpp"
#include "pvi/crypto/tlc.hpp"
#include "pvi/mech/coverage.hpp"
#include "pvi/protocol/pvi_h.hpp"
#include "pvi/secure/compare.hpp"
#include "pvi/secure/mpep.hpp"
#include "pvi/secure/payment_terms.hpp"
#include "pvi/secure/set_union.hpp"

namespace pvi::protocol {

namespace {

using board::PayloadKind;
using mech::UserId;

constexpr std::uint32_t kExhausted = 0xffffffffu;

mpq_class ratio(std::size_t num, const mpq_class& den) {
  return mpq_class(mpz_class(static_cast<unsigned long>(num))) / den;
}

struct ListItem {
  std::uint32_t index = 0;  // round or iteration
  Bytes commitment;
};

Bytes list_body(std::uint32_t index, const Bytes& commitment) {
  ByteWriter w;
  w.u32(index).bytes(commitment);
  return std::move(w).take();
}

ListItem parse_list_body(std::span<const std::uint8_t> body) {
  ByteReader r(body);
  ListItem out;
  out.index = r.u32();
  out.commitment = r.bytes();
  r.expect_done();
  return out;
}

struct WinnerState {
  crypto::PaillierCiphertext e_ui;
  std::uint32_t utility_with_winner = 0;  // U(T u {i})
  std::uint32_t utility_after = 0;        // U(T u {i_j})
  std::uint32_t referenced = kExhausted;
};

Bytes state_payload(const WinnerState& s) {
  ByteWriter w;
  w.u32(s.utility_with_winner).u32(s.utility_after).u32(s.referenced);
  return std::move(w).take();
}

Bytes ciphertext_bytes(const crypto::PaillierCiphertext& c, std::size_t width) {
  ByteWriter w;
  w.u64(c.key_id).mpz_fixed(c.value, width);
  return std::move(w).take();
}

std::vector<const board::BulletinEntry*> list_entries(const board::BulletinBoard& board,
                                                      const std::string& list_id) {
  std::vector<const board::BulletinEntry*> out;
  for (std::uint64_t seq : board.read_list(list_id).entries) out.push_back(board.entry(seq));
  return out;
}

crypto::PaillierCiphertext parse_ciphertext(ByteReader& r, std::size_t width) {
  crypto::PaillierCiphertext c;
  c.key_id = r.u64();
  c.value = r.mpz_fixed(width);
  return c;
}

class SArtifacts final : public RunArtifacts {
 public:
  const SystemSetup* setup = nullptr;
  AuctionConfig config;
  crypto::OrderCodebook omega_book;
  mpz_class q_omega;
  mpz_class q_pay;
  mpz_class tsk;
  std::vector<UserId> participants;
  // Randomness behind each entry of lw/<user>, in list order.
  std::map<UserId, std::vector<mpz_class>> randomness;
  std::set<UserId> withdrawn;

  VerifyResult verify(UserId user, const RunTranscript& tr) const override {
    return audit(user, tr, nullptr);
  }

  VerifyResult audit(UserId user, const RunTranscript& tr, Bus* bus) const;

 private:
  Bytes open(const Bytes& commitment, Bus* bus) const {
    if (bus) bus->op(kAi, Phase::kVerification, Op::kTlcOpen);
    return crypto::tlc_open_with_key(setup->group(), tsk,
                                     crypto::TlcCommitment::deserialize(setup->group(), commitment));
  }
};

VerifyResult discrepancy(const mpq_class& observed, std::string reason) {
  VerifyResult out;
  out.status = VerifyResult::Status::kDiscrepancy;
  out.observed = observed;
  out.reason = std::move(reason);
  return out;
}

VerifyResult SArtifacts::audit(UserId user, const RunTranscript& tr, Bus* bus) const {
  const board::BulletinBoard& board = *tr.board;
  if (board.of_kind(PayloadKind::kKeyRelease).empty())
    throw VerificationError("time-lapse key was never released");
  if (board.of_kind(PayloadKind::kOutcomeRecord).empty())
    throw VerificationError("outcome record missing from the board");
  const mpq_class observed = tr.outcome.payment_of(user);
  if (config.budget <= 0) {
    VerifyResult out;
    out.observed = observed;
    if (observed != 0) out.status = VerifyResult::Status::kDiscrepancy;
    return out;
  }
  const crypto::PaillierKeypair& platform = setup->platform_key();
  const crypto::PaillierKeypair& ai = setup->ai_key();
  auto count = [&](Op op) {
    if (bus) bus->op(kAi, Phase::kVerification, op);
  };

  // Winner determination replay: each round's argmax against the platform's
  // committed candidate and threshold.
  std::map<std::uint32_t, std::vector<std::pair<UserId, mpq_class>>> rounds;
  for (UserId u : participants) {
    const auto list = list_entries(board, board::winner_list(u));
    auto rs = randomness.find(u);
    for (std::size_t k = 0; k < list.size(); ++k) {
      ListItem item = parse_list_body(list[k]->payload.body);
      if (list[k]->author != user_party(u))
        return discrepancy(observed, "foreign entry in a winner list");
      if (rs == randomness.end() || k >= rs->second.size())
        return discrepancy(observed, "missing randomness for a committed value");
      Bytes payload = open(item.commitment, bus);
      ByteReader r(payload);
      crypto::PaillierCiphertext e = parse_ciphertext(r, platform.pub().ciphertext_bytes());
      count(Op::kPaillierExp);
      mpz_class code = platform.pub().open_with_randomness(e, rs->second[k]);
      rounds[item.index].emplace_back(u, omega_book.decode(code));
    }
  }
  std::vector<UserId> expected_winners;
  bool closed = false;
  for (const board::BulletinEntry* entry : list_entries(board, board::platform_winner_list())) {
    if (closed) return discrepancy(observed, "winner determination continued after a rejection");
    if (entry->author != kPlatform) return discrepancy(observed, "foreign entry in the platform list");
    ListItem item = parse_list_body(entry->payload.body);
    Bytes payload = open(item.commitment, bus);
    ByteReader r(payload);
    UserId candidate = r.u32();
    mpq_class omega_p = omega_book.decode(r.mpz_fixed((omega_book.code_bits() + 7) / 8));
    auto it = rounds.find(item.index);
    if (it == rounds.end()) return discrepancy(observed, "platform committed to an empty round");
    const std::pair<UserId, mpq_class>* best = nullptr;
    for (const auto& c : it->second)
      if (!best || c.second > best->second || (c.second == best->second && c.first < best->first))
        best = &c;
    if (best->first != candidate) return discrepancy(observed, "winner candidate is not the argmax");
    if (best->second >= omega_p) {
      if (!withdrawn.contains(candidate)) expected_winners.push_back(candidate);
    } else {
      closed = true;
    }
  }
  if (expected_winners != tr.outcome.winners)
    return discrepancy(observed, "winner set differs from the replay");
  if (!tr.outcome.is_winner(user)) {
    VerifyResult out;
    out.observed = observed;
    if (observed != 0) out.status = VerifyResult::Status::kDiscrepancy;
    return out;
  }

  // Payment replay for this winner.
  std::map<std::uint32_t, std::vector<std::pair<UserId, mpq_class>>> iterations;
  for (UserId u : participants) {
    if (u == user) continue;
    for (const board::BulletinEntry* entry : list_entries(board, board::payment_list(u, user))) {
      ListItem item = parse_list_body(entry->payload.body);
      Bytes payload = open(item.commitment, bus);
      ByteReader r(payload);
      crypto::PaillierCiphertext e = parse_ciphertext(r, ai.pub().ciphertext_bytes());
      count(Op::kPaillierDec);
      iterations[item.index].emplace_back(u, mpq_class(ai.decrypt(e)) / q_omega);
    }
  }
  const auto states = list_entries(board, board::winner_state_list(user));
  if (states.empty()) return discrepancy(observed, "no payment state for a winner");
  mpq_class payment = 0;
  std::size_t utility_before = 0;
  for (std::size_t k = 0; k < states.size(); ++k) {
    ByteReader r(states[k]->payload.body);
    Bytes ct = r.bytes();
    ByteReader cr(ct);
    crypto::PaillierCiphertext e_ui = parse_ciphertext(cr, ai.pub().ciphertext_bytes());
    Bytes payload = open(r.bytes(), bus);
    ByteReader pr(payload);
    WinnerState s;
    s.utility_with_winner = pr.u32();
    s.utility_after = pr.u32();
    s.referenced = pr.u32();
    count(Op::kPaillierDec);
    mpz_class ui = ai.decrypt(e_ui);
    mpq_class eta = s.utility_with_winner == 0
                        ? mpq_class(0)
                        : mpq_class(ui) * config.budget / mpq_class(mpz_class(s.utility_with_winner));
    auto it = iterations.find(static_cast<std::uint32_t>(k));
    if (s.referenced == kExhausted) {
      if (it != iterations.end()) return discrepancy(observed, "exhaustion claimed with users left");
      if (eta > payment) payment = eta;
      if (k + 1 != states.size()) return discrepancy(observed, "payment continued after exhaustion");
      break;
    }
    if (it == iterations.end()) return discrepancy(observed, "referenced user without submissions");
    const std::pair<UserId, mpq_class>* best = nullptr;
    for (const auto& c : it->second)
      if (!best || c.second > best->second || (c.second == best->second && c.first < best->first))
        best = &c;
    if (best->first != s.referenced) return discrepancy(observed, "referenced user is not the argmax");
    if (s.utility_after < utility_before) return discrepancy(observed, "coverage decreased");
    std::size_t uij = s.utility_after - utility_before;
    mpq_class term = eta;
    if (uij > 0 && best->second > 0) {
      mpq_class bid_term = mpq_class(ui) / best->second;
      if (bid_term < term) term = bid_term;
    }
    if (term > payment) payment = term;
    bool stop = best->second < ratio(s.utility_after, config.budget);
    if (stop && k + 1 != states.size())
      return discrepancy(observed, "payment loop continued past its stopping point");
    if (!stop && k + 1 == states.size())
      return discrepancy(observed, "payment loop stopped early");
    utility_before = s.utility_after;
  }
  VerifyResult out;
  out.expected = payment;
  out.observed = observed;
  if (payment != observed) {
    out.status = VerifyResult::Status::kDiscrepancy;
    out.reason = "payment differs from the replay";
  }
  return out;
}

void check_inputs(const AuctionConfig& config, const std::vector<mech::SensingProfile>& profiles) {
  std::set<mpq_class> bids(config.bid_domain.begin(), config.bid_domain.end());
  std::set<UserId> ids;
  for (const mech::SensingProfile& p : profiles) {
    if (!bids.contains(p.bid)) throw DomainError("bid outside the declared domain");
    if (!ids.insert(p.user_id).second) throw DomainError("duplicate user id");
    if (p.assignments.empty()) throw DomainError("assignment sets must be nonempty");
    if (p.user_id == kExhausted) throw DomainError("reserved user id");
  }
}

std::vector<mpz_class> elements_of(const mech::CoverSet& set) {
  std::vector<mpz_class> out;
  for (std::size_t k = set.find_first(); k != mech::CoverSet::npos; k = set.find_next(k))
    out.push_back(secure::encode_assignment(static_cast<std::uint32_t>(k)));
  return out;
}

}  // namespace

RunTranscript run_pvi_s(const SystemSetup& setup, const AuctionConfig& config,
                        const std::vector<mech::SensingProfile>& profiles,
                        const RunOptions& options) {
  auto started = std::chrono::steady_clock::now();
  config.validate();
  if (config.model != mech::JobModel::kSubmodular) throw UsageError("PVI-S runs submodular auctions");
  check_inputs(config, profiles);
  const mech::CoverageUtility utility = mech::CoverageUtility::from_profiles(config.ground_size, profiles);

  const crypto::GroupParams& group = setup.group();
  const crypto::PaillierKeypair& platform_key = setup.platform_key();
  const crypto::PaillierPublicKey& platform_pk = platform_key.pub();
  const crypto::PaillierPublicKey& ai_pk = setup.ai_key().pub();
  const std::size_t pct = platform_pk.ciphertext_bytes();
  const std::size_t act = ai_pk.ciphertext_bytes();
  const std::int64_t T = config.deadline;
  const mpq_class& B = config.budget;
  const std::size_t m = config.ground_size;
  const std::size_t n = profiles.size();
  const Misbehavior& fault = options.misbehavior;

  RunTranscript tr;
  tr.config = config;
  tr.board = std::make_shared<board::BulletinBoard>(group);
  tr.release_round = T + 1;
  for (const auto& p : profiles) tr.participants.push_back(p.user_id);
  detail::register_parties(tr, setup, profiles);

  Rng master(config.seed);
  Rng ai_rng = master.fork();
  Rng platform_rng = master.fork();
  Rng audit_rng = master.fork();
  std::vector<Rng> user_rng;
  for (std::size_t j = 0; j < n; ++j) user_rng.push_back(master.fork());
  Rng mpep_rng = master.fork();

  auto artifacts = std::make_shared<SArtifacts>();
  artifacts->setup = &setup;
  artifacts->config = config;
  artifacts->participants = tr.participants;

  // Users in id order, so linear argmax ties resolve to the lower id.
  std::vector<std::size_t> by_id(n);
  for (std::size_t j = 0; j < n; ++j) by_id[j] = j;
  std::sort(by_id.begin(), by_id.end(),
            [&](std::size_t a, std::size_t b) { return profiles[a].user_id < profiles[b].user_id; });

  // Round 0: one order-preserving codebook over every attainable U/b and U/B.
  std::vector<mpq_class> omega_domain;
  for (std::size_t u = 0; u <= m; ++u) {
    for (const mpq_class& b : config.bid_domain) omega_domain.push_back(ratio(u, b));
    if (B > 0) omega_domain.push_back(ratio(u, B));
  }
  std::sort(omega_domain.begin(), omega_domain.end());
  omega_domain.erase(std::unique(omega_domain.begin(), omega_domain.end()), omega_domain.end());
  artifacts->omega_book = crypto::OrderCodebook(omega_domain, config.code_bits, ai_rng);
  const crypto::OrderCodebook& book = artifacts->omega_book;
  detail::MaskedCodebook ot_table;
  ot_table.build(group, book, ai_rng);
  crypto::TlcService tlc(group, T + 1, ai_rng);
  if (B > 0) {
    artifacts->q_omega = secure::marginal_scale(config.bid_domain, B);
    artifacts->q_pay = secure::payment_scale(config.bid_domain, B, m);
  }
  {
    ByteWriter w;
    w.bytes(config.serialize()).mpz_fixed(tlc.public_key(), group.element_bytes());
    ot_table.serialize_into(w);
    tr.bus.send(kAi, kPlatform, 0, Phase::kSetup, "auction_details", w.size());
    detail::post(tr, kAi, setup.ai_signing(), 0, Phase::kSetup,
                 {PayloadKind::kAuctionDetails, "", std::move(w).take()}, ai_rng);
  }

  secure::ComparisonAuthority authority(setup.ai_key());
  std::string tokens;
  authority.set_observer([&](secure::Ordering o) { tokens.push_back(secure::ordering_tag(o)); });
  PartyView& pview = tr.view(kPlatform);
  auto compares_since = [&](std::size_t before) {
    tr.bus.op(kPlatform, Phase::kPayment, Op::kCompare, authority.requests() - before);
    tr.bus.send(kPlatform, kAi, 1, Phase::kPayment, "compare", 2 * act * (authority.requests() - before));
  };

  // Set union between the platform's covered set and one user's assignments;
  // returns the indices new to the platform.
  auto set_union = [&](const mech::CoverSet& platform_cover, std::size_t j, Phase phase) {
    const PartyId me = user_party(profiles[j].user_id);
    auto coefficients = secure::psu_encrypt_polynomial(platform_pk, elements_of(platform_cover), platform_rng);
    tr.bus.op(kPlatform, phase, Op::kPaillierEnc, coefficients.size());
    tr.bus.send(kPlatform, me, 1, phase, "psu_polynomial", coefficients.size() * pct);
    auto tuples = secure::psu_evaluate(platform_pk, coefficients, elements_of(utility.set_of(j)), user_rng[j]);
    tr.bus.op(me, phase, Op::kPsuEval, tuples.size());
    tr.bus.send(me, kPlatform, 1, phase, "psu_tuples", tuples.size() * 2 * pct);
    auto fresh = secure::psu_extract(platform_key, tuples);
    tr.bus.op(kPlatform, phase, Op::kPaillierDec, 2 * tuples.size());
    std::vector<std::uint32_t> out;
    for (const mpz_class& v : fresh) {
      out.push_back(secure::decode_assignment(v));
      pview.record(1, Field::kSetUnionElement, profiles[j].user_id, std::to_string(out.back()));
    }
    return out;
  };

  auto mpep_round = [&](const std::vector<bool>& in_set, Phase phase) {
    std::vector<secure::IndicatorShare> shares;
    for (std::size_t j = 0; j < n; ++j) {
      shares.push_back({utility.set_of(j), in_set[j]});
      const PartyId me = user_party(profiles[j].user_id);
      tr.bus.op(me, phase, Op::kMpepShare);
      tr.bus.send(me, kMpep, 1, phase, "mpep_share", (m + 7) / 8);
    }
    return secure::MpepAggregator(std::move(shares));
  };

  mech::AuctionOutcome outcome;
  std::vector<std::size_t> winners;

  // Round 1, winner determination.
  if (B > 0) {
    std::vector<bool> in_s(n, false), pool(n, true);
    mech::CoverSet cover_s(m);
    std::vector<std::optional<std::pair<mpq_class, mpz_class>>> cached(n);
    for (std::uint32_t round = 0;; ++round) {
      std::vector<std::size_t> active;
      for (std::size_t j : by_id)
        if (pool[j]) active.push_back(j);
      if (active.empty()) break;
      secure::MpepAggregator agg = mpep_round(in_s, Phase::kWinner);
      std::vector<mpz_class> codes;
      for (std::size_t j : active) {
        const UserId id = profiles[j].user_id;
        const PartyId me = user_party(id);
        std::size_t u = agg.marginal(j);
        tr.bus.send(kMpep, me, 1, Phase::kWinner, "marginal", 4);
        tr.view(me).record(1, Field::kMarginal, id, std::to_string(u));
        mpq_class omega = ratio(u, profiles[j].bid);
        if (!cached[j] || cached[j]->first != omega)
          cached[j].emplace(omega, detail::fetch_code(tr.bus, group, ot_table, book.rank(omega), me, 1,
                                                      Phase::kWinner, user_rng[j], ai_rng));
        tr.view(me).record(1, Field::kCode, id, cached[j]->second.get_str());
        mpz_class r = user_rng[j].unit_mod(platform_pk.n());
        crypto::PaillierCiphertext e = platform_pk.encrypt(cached[j]->second, r);
        tr.bus.op(me, Phase::kWinner, Op::kPaillierEnc);
        artifacts->randomness[id].push_back(r);
        Bytes c = tlc.commit(ciphertext_bytes(e, pct), user_rng[j]).serialize(group);
        tr.bus.op(me, Phase::kWinner, Op::kTlcCommit);
        detail::post(tr, me, setup.user_signing(id), 1, Phase::kWinner,
                     {PayloadKind::kListAppend, board::winner_list(id), list_body(round, c)}, user_rng[j]);
        tr.bus.send(me, kPlatform, 1, Phase::kWinner, "omega_ciphertext", pct);
        codes.push_back(platform_key.decrypt(e));
        tr.bus.op(kPlatform, Phase::kWinner, Op::kPaillierDec);
        pview.record(1, Field::kCode, id, codes.back().get_str());
      }
      std::vector<std::size_t> ranked(active.size());
      for (std::size_t k = 0; k < ranked.size(); ++k) ranked[k] = k;
      std::stable_sort(ranked.begin(), ranked.end(),
                       [&](std::size_t a, std::size_t b) { return codes[a] > codes[b]; });
      std::size_t pick = ranked[0];
      if (fault.kind == Misbehavior::Kind::kForgeRank && round == 0 && ranked.size() >= 2) pick = ranked[1];
      const std::size_t c = active[pick];
      const UserId cid = profiles[c].user_id;

      std::size_t gain = set_union(cover_s, c, Phase::kWinner).size();
      std::size_t after = cover_s.count() + gain;
      pview.record(1, Field::kUtility, std::nullopt, std::to_string(after));
      mpz_class code_p = detail::fetch_code(tr.bus, group, ot_table, book.rank(ratio(after, B)), kPlatform,
                                            1, Phase::kWinner, platform_rng, ai_rng);
      {
        ByteWriter w;
        w.u32(cid).mpz_fixed(code_p, (config.code_bits + 7) / 8);
        Bytes commitment = tlc.commit(w.data(), platform_rng).serialize(group);
        tr.bus.op(kPlatform, Phase::kWinner, Op::kTlcCommit);
        detail::post(tr, kPlatform, setup.platform_signing(), 1, Phase::kWinner,
                     {PayloadKind::kListAppend, board::platform_winner_list(), list_body(round, commitment)},
                     platform_rng);
      }
      if (codes[pick] < code_p) {
        tr.failing_rank = winners.size() + 1;
        tr.log.push_back("winner determination closed at round " + std::to_string(round));
        break;
      }
      const PartyId me = user_party(cid);
      tr.bus.send(kPlatform, me, 1, Phase::kWinner, "winner_notice", 16);
      tr.view(me).record(1, Field::kWinnerNotice, cid, "1");
      pool[c] = false;
      if (options.silent_winner && *options.silent_winner == cid) {
        artifacts->withdrawn.insert(cid);
        tr.log.push_back("user " + std::to_string(cid) + " did not acknowledge and withdraws");
        continue;
      }
      // Acknowledgement: assignments and bid under the platform key.
      std::vector<mpz_class> own = elements_of(utility.set_of(c));
      tr.bus.op(me, Phase::kWinner, Op::kPaillierEnc, own.size() + 2);
      tr.bus.send(me, kPlatform, 1, Phase::kWinner, "winner_ack", (own.size() + 2) * pct);
      tr.bus.op(kPlatform, Phase::kWinner, Op::kPaillierDec, own.size() + 2);
      pview.record(1, Field::kBid, cid, detail::fraction(profiles[c].bid));
      std::string listed;
      for (const mpz_class& v : own)
        listed += (listed.empty() ? "" : ",") + std::to_string(secure::decode_assignment(v));
      pview.record(1, Field::kAssignments, cid, listed);
      cover_s |= utility.set_of(c);
      in_s[c] = true;
      winners.push_back(c);
    }
  }

  // Round 1, payment determination for each winner.
  for (std::size_t w : winners) {
    const UserId wid = profiles[w].user_id;
    std::vector<bool> in_t(n, false);
    mech::CoverSet cover_t(m);
    crypto::PaillierCiphertext p_hat = ai_pk.encrypt(0, platform_rng);
    for (std::uint32_t iter = 0;; ++iter) {
      secure::MpepAggregator agg = mpep_round(in_t, Phase::kPayment);
      WinnerState state;
      state.e_ui = ai_pk.encrypt(mpz_class(static_cast<unsigned long>(agg.marginal(w))), mpep_rng);
      tr.bus.op(kMpep, Phase::kPayment, Op::kPaillierEnc);
      tr.bus.send(kMpep, kPlatform, 1, Phase::kPayment, "winner_marginal", act);
      state.utility_with_winner = static_cast<std::uint32_t>((cover_t | utility.set_of(w)).count());
      pview.record(1, Field::kUtility, std::nullopt, std::to_string(state.utility_with_winner));
      crypto::PaillierCiphertext eta =
          secure::divide_by(ai_pk, state.e_ui, ratio(state.utility_with_winner, B), artifacts->q_pay);
      tr.bus.op(kPlatform, Phase::kPayment, Op::kPaillierExp);

      std::vector<std::size_t> remaining;
      for (std::size_t j : by_id)
        if (j != w && !in_t[j]) remaining.push_back(j);
      if (remaining.empty()) {
        std::size_t before = authority.requests();
        p_hat = secure::encrypted_max(p_hat, eta, authority, platform_rng);
        compares_since(before);
        state.utility_after = static_cast<std::uint32_t>(cover_t.count());
        ByteWriter body;
        body.bytes(ciphertext_bytes(state.e_ui, act));
        body.bytes(tlc.commit(state_payload(state), platform_rng).serialize(group));
        tr.bus.op(kPlatform, Phase::kPayment, Op::kTlcCommit);
        detail::post(tr, kPlatform, setup.platform_signing(), 1, Phase::kPayment,
                     {PayloadKind::kListAppend, board::winner_state_list(wid), std::move(body).take()},
                     platform_rng);
        break;
      }

      std::vector<crypto::PaillierCiphertext> es;
      std::vector<std::size_t> marginals;
      for (std::size_t j : remaining) {
        const UserId id = profiles[j].user_id;
        const PartyId me = user_party(id);
        std::size_t u = agg.marginal(j);
        marginals.push_back(u);
        tr.bus.send(kMpep, me, 1, Phase::kPayment, "marginal", 4);
        tr.view(me).record(1, Field::kMarginal, id, std::to_string(u));
        mpz_class scaled = secure::exact_scaled(ratio(u, profiles[j].bid), artifacts->q_omega);
        es.push_back(ai_pk.encrypt(scaled, user_rng[j]));
        tr.bus.op(me, Phase::kPayment, Op::kPaillierEnc);
        Bytes c = tlc.commit(ciphertext_bytes(es.back(), act), user_rng[j]).serialize(group);
        tr.bus.op(me, Phase::kPayment, Op::kTlcCommit);
        detail::post(tr, me, setup.user_signing(id), 1, Phase::kPayment,
                     {PayloadKind::kListAppend, board::payment_list(id, wid), list_body(iter, c)},
                     user_rng[j]);
        tr.bus.send(me, kPlatform, 1, Phase::kPayment, "omega_ciphertext", act);
      }
      tokens.clear();
      std::size_t before = authority.requests();
      std::size_t idx = secure::encrypted_argmax(es, authority);
      compares_since(before);
      pview.record(1, Field::kOrdering, std::nullopt, tokens);
      {
        ByteWriter body;
        body.u32(wid).u32(iter).str(tokens);
        detail::post(tr, kPlatform, setup.platform_signing(), 1, Phase::kPayment,
                     {PayloadKind::kOrderingToken, "", std::move(body).take()}, platform_rng);
      }
      const std::size_t ij = remaining[idx];
      const UserId ijd = profiles[ij].user_id;
      const PartyId ref = user_party(ijd);
      tr.bus.send(kPlatform, ref, 1, Phase::kPayment, "referenced_notice", 16);
      tr.view(ref).record(1, Field::kReferencedNotice, ijd, std::to_string(iter));

      std::vector<std::uint32_t> fresh = set_union(cover_t, ij, Phase::kPayment);
      std::size_t uij = fresh.size();
      state.referenced = ijd;
      state.utility_after = static_cast<std::uint32_t>(cover_t.count() + uij);

      crypto::PaillierCiphertext term = eta;
      if (marginals[idx] > 0) {
        tr.bus.send(kPlatform, ref, 1, Phase::kPayment, "winner_marginal", act);
        crypto::PaillierCiphertext bid_term = secure::divide_by(
            ai_pk, state.e_ui, ratio(marginals[idx], profiles[ij].bid), artifacts->q_pay);
        tr.bus.op(ref, Phase::kPayment, Op::kPaillierExp);
        tr.bus.send(ref, kPlatform, 1, Phase::kPayment, "bid_term", act);
        before = authority.requests();
        term = secure::encrypted_min(bid_term, eta, authority, platform_rng);
        compares_since(before);
      }
      before = authority.requests();
      p_hat = secure::encrypted_max(p_hat, term, authority, platform_rng);
      {
        ByteWriter body;
        body.bytes(ciphertext_bytes(state.e_ui, act));
        body.bytes(tlc.commit(state_payload(state), platform_rng).serialize(group));
        tr.bus.op(kPlatform, Phase::kPayment, Op::kTlcCommit);
        detail::post(tr, kPlatform, setup.platform_signing(), 1, Phase::kPayment,
                     {PayloadKind::kListAppend, board::winner_state_list(wid), std::move(body).take()},
                     platform_rng);
      }
      // Stop once i_j would not have been admitted after T.
      crypto::PaillierCiphertext threshold =
          ai_pk.encrypt(secure::exact_scaled(ratio(state.utility_after, B), artifacts->q_omega), platform_rng);
      tr.bus.op(kPlatform, Phase::kPayment, Op::kPaillierEnc);
      secure::Ordering o = secure::encrypted_compare(es[idx], threshold, authority);
      compares_since(before);
      for (std::uint32_t k : fresh) cover_t.set(k);
      in_t[ij] = true;
      if (o == secure::Ordering::kLess) break;
    }
    tr.bus.send(kPlatform, kAi, 1, Phase::kPayment, "payment_decrypt", act);
    mpz_class scaled = setup.ai_key().decrypt(p_hat);
    tr.bus.op(kAi, Phase::kPayment, Op::kPaillierDec);
    tr.bus.send(kAi, kPlatform, 1, Phase::kPayment, "payment_plain", 64);
    mpq_class pay = mpq_class(scaled) / artifacts->q_pay;
    pay.canonicalize();
    if (fault.kind == Misbehavior::Kind::kUnderpay && fault.target.value_or(profiles[winners.front()].user_id) == wid)
      pay -= fault.delta;
    outcome.winners.push_back(wid);
    outcome.allocation[wid] = 1;
    outcome.payments[wid] = pay;
    const PartyId me = user_party(wid);
    tr.bus.send(kPlatform, me, 1, Phase::kPayment, "payment", 32);
    tr.view(me).record(1, Field::kPayment, wid, detail::fraction(pay));
  }
  if (fault.kind == Misbehavior::Kind::kDropCommitment)
    tr.log.push_back("commitment-drop fault has no effect on submodular auctions");

  {
    ByteWriter record;
    record.u32(static_cast<std::uint32_t>(outcome.winners.size()));
    for (UserId id : outcome.winners) {
      mpq_class pay = outcome.payments[id] < 0 ? mpq_class(0) : outcome.payments[id];
      record.u32(id).u32(1);
      record.bytes(ai_pk.encrypt(pay.get_num(), platform_rng).serialize(act));
      record.bytes(ai_pk.encrypt(pay.get_den(), platform_rng).serialize(act));
      tr.bus.op(kPlatform, Phase::kPayment, Op::kPaillierEnc, 2);
    }
    detail::post(tr, kPlatform, setup.platform_signing(), 1, Phase::kPayment,
                 {PayloadKind::kOutcomeRecord, "", std::move(record).take()}, platform_rng);
  }
  tr.outcome = std::move(outcome);

  // Round T+1: key release and audits.
  tlc.advance_to(T + 1);
  artifacts->tsk = *tlc.release_key();
  detail::post(tr, kAi, setup.ai_signing(), T + 1, Phase::kVerification,
               {PayloadKind::kKeyRelease, "", mpz_to_bytes(artifacts->tsk)}, ai_rng);
  if (options.run_verification) {
    mpq_class alpha = options.audit_probability.value_or(config.verification.alpha);
    for (const mech::SensingProfile& p : profiles) {
      if (!audit_rng.bernoulli(alpha)) continue;
      const PartyId me = user_party(p.user_id);
      tr.bus.send(me, kAi, T + 1, Phase::kVerification, "audit_request", 8);
      for (const auto& [id, rs] : artifacts->randomness) {
        tr.bus.send(kAi, user_party(id), T + 1, Phase::kVerification, "randomness_request", 8);
        tr.bus.send(user_party(id), kAi, T + 1, Phase::kVerification, "randomness", rs.size() * pct / 2);
        for (const mpz_class& r : rs) tr.view(kAi).record(T + 1, Field::kRandomness, id, r.get_str(16));
      }
      VerifyResult result = artifacts->audit(p.user_id, tr, &tr.bus);
      tr.bus.send(kAi, me, T + 1, Phase::kVerification, "audit_result", 64);
      if (!result.confirmed()) {
        tr.fines += config.verification.fine;
        tr.log.push_back("audit by user " + std::to_string(p.user_id) + ": " + result.reason);
      }
      tr.audits.push_back({p.user_id, std::move(result)});
    }
  }

  tr.artifacts = artifacts;
  tr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return tr;
}

RunTranscript run_protocol(const SystemSetup& setup, const AuctionConfig& config,
                           const std::vector<mech::SensingProfile>& profiles,
                           const RunOptions& options) {
  if (config.model == mech::JobModel::kSubmodular) return run_pvi_s(setup, config, profiles, options);
  return run_pvi_h(setup, config, profiles, options);
}

}  // namespace pvi::protocol
