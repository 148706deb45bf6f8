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
#include "pvi/protocol/pvi_h.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "internal.hpp"
#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/blind_nr.hpp"
#include "pvi/crypto/opes.hpp"
#include "pvi/crypto/tlc.hpp"
#include "pvi/mech/mechanisms.hpp"

namespace pvi::protocol {

namespace {

using board::PayloadKind;
using mech::UserId;

constexpr std::size_t kProofBytes = 16;

struct PostedCommitment {
  UserId user = 0;
  Bytes commitment;
  crypto::SchnorrSignature request_sig;
};

Bytes request_bytes(std::span<const std::uint8_t> commitment, const std::string& tid) {
  ByteWriter w;
  w.str("pvi.bidding_request").bytes(commitment).str(tid);
  return std::move(w).take();
}

Bytes commitment_body(const crypto::GroupParams& group, const PostedCommitment& c) {
  ByteWriter w;
  w.u32(c.user).bytes(c.commitment).bytes(c.request_sig.serialize(group));
  return std::move(w).take();
}

std::optional<PostedCommitment> parse_commitment_body(const crypto::GroupParams& group,
                                                      std::span<const std::uint8_t> body) {
  try {
    ByteReader r(body);
    PostedCommitment out;
    out.user = r.u32();
    out.commitment = r.bytes();
    Bytes sig = r.bytes();
    r.expect_done();
    std::size_t width = (mpz_sizeinbase(group.q.get_mpz_t(), 2) + 7) / 8;
    if (sig.size() != 2 * width) return std::nullopt;
    out.request_sig.e = mpz_from_bytes(std::span(sig).first(width));
    out.request_sig.s = mpz_from_bytes(std::span(sig).subspan(width));
    return out;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

// Commitments on the board, first per user, in posting order.
std::vector<PostedCommitment> posted_commitments(const crypto::GroupParams& group,
                                                 const board::BulletinBoard& board) {
  std::vector<PostedCommitment> out;
  std::set<UserId> seen;
  for (const board::BulletinEntry* e : board.of_kind(PayloadKind::kCommitment)) {
    auto c = parse_commitment_body(group, e->payload.body);
    if (c && seen.insert(c->user).second) out.push_back(std::move(*c));
  }
  return out;
}

struct OpenedProfile {
  crypto::PaillierCiphertext e;
  Bytes proof;
  std::string tid;
};

OpenedProfile parse_profile_payload(std::span<const std::uint8_t> payload) {
  ByteReader r(payload);
  OpenedProfile out;
  out.e.key_id = r.u64();
  out.e.value = mpz_from_bytes(r.bytes());
  out.proof = r.bytes();
  out.tid = r.str();
  r.expect_done();
  return out;
}

Bytes profile_payload(const crypto::PaillierCiphertext& e, std::size_t width, const Bytes& proof,
                      const std::string& tid) {
  ByteWriter w;
  w.u64(e.key_id).bytes(mpz_to_bytes(e.value, width)).bytes(proof).str(tid);
  return std::move(w).take();
}

std::pair<mpz_class, mpz_class> unpack_codes(const mpz_class& packed, unsigned bits) {
  mpz_class hi, lo;
  mpz_fdiv_q_2exp(hi.get_mpz_t(), packed.get_mpz_t(), bits);
  mpz_fdiv_r_2exp(lo.get_mpz_t(), packed.get_mpz_t(), bits);
  return {hi, lo};
}

class HArtifacts final : public RunArtifacts {
 public:
  const SystemSetup* setup = nullptr;
  AuctionConfig config;
  crypto::EncodingTable table;
  mpz_class tsk;
  // What each user hands over when the AI asks for e_i's randomness.
  std::map<UserId, mpz_class> randomness;

  VerifyResult verify(UserId user, const RunTranscript& tr) const override {
    return audit(user, tr, nullptr);
  }

  VerifyResult audit(UserId user, const RunTranscript& tr, Bus* bus) const {
    const crypto::GroupParams& group = setup->group();
    const board::BulletinBoard& board = *tr.board;
    if (board.of_kind(PayloadKind::kKeyRelease).empty())
      throw VerificationError("time-lapse key was never released");
    if (board.of_kind(PayloadKind::kOutcomeRecord).empty())
      throw VerificationError("outcome record missing from the board");
    auto count = [&](Op op) {
      if (bus) bus->op(kAi, Phase::kVerification, op);
    };
    std::vector<mech::SensingProfile> profiles;
    for (const PostedCommitment& c : posted_commitments(group, board)) {
      try {
        count(Op::kTlcOpen);
        Bytes payload =
            crypto::tlc_open_with_key(group, tsk, crypto::TlcCommitment::deserialize(group, c.commitment));
        OpenedProfile opened = parse_profile_payload(payload);
        auto r = randomness.find(c.user);
        if (r == randomness.end() || opened.tid != config.tid) continue;
        count(Op::kPaillierExp);
        mpz_class packed = setup->platform_key().pub().open_with_randomness(opened.e, r->second);
        auto [b_code, l_code] = unpack_codes(packed, config.code_bits);
        mech::SensingProfile p;
        p.user_id = c.user;
        p.bid = table.bids.decode(b_code);
        p.limit = static_cast<std::uint32_t>(table.limits.decode(l_code).get_num().get_ui());
        profiles.push_back(std::move(p));
      } catch (const Error&) {
        continue;  // the platform excludes the same malformed commitment
      }
    }
    mech::AuctionOutcome expected = config.model == mech::JobModel::kHomogeneous
                                        ? mech::run_homogeneous(profiles, config.budget)
                                        : mech::run_heterogeneous(profiles, config.budget);
    VerifyResult out;
    out.expected = expected.payment_of(user);
    out.observed = tr.outcome.payment_of(user);
    if (out.expected != out.observed) {
      out.status = VerifyResult::Status::kDiscrepancy;
      out.reason = "payment differs from the recomputed outcome";
    } else {
      auto ea = expected.allocation.find(user);
      auto oa = tr.outcome.allocation.find(user);
      bool e_has = ea != expected.allocation.end();
      bool o_has = oa != tr.outcome.allocation.end();
      if (e_has != o_has || (e_has && ea->second != oa->second)) {
        out.status = VerifyResult::Status::kDiscrepancy;
        out.reason = "allocation differs from the recomputed outcome";
      }
    }
    return out;
  }
};

void check_domains(const AuctionConfig& config, const std::vector<mech::SensingProfile>& profiles) {
  std::set<mpq_class> bids(config.bid_domain.begin(), config.bid_domain.end());
  std::set<mpq_class> limits(config.limit_domain.begin(), config.limit_domain.end());
  std::set<UserId> ids;
  for (const mech::SensingProfile& p : profiles) {
    if (!bids.contains(p.bid)) throw DomainError("bid outside the declared domain");
    if (!limits.contains(mpq_class(p.limit))) throw DomainError("limit outside the declared domain");
    if (!ids.insert(p.user_id).second) throw DomainError("duplicate user id");
  }
}

}  // namespace

RunTranscript run_pvi_h(const SystemSetup& setup, const AuctionConfig& config,
                        const std::vector<mech::SensingProfile>& profiles,
                        const RunOptions& options) {
  auto started = std::chrono::steady_clock::now();
  config.validate();
  if (config.model == mech::JobModel::kSubmodular) throw UsageError("PVI-H runs H-model auctions");
  if (config.model == mech::JobModel::kHomogeneous &&
      (config.limit_domain.size() != 1 || config.limit_domain[0] != 1))
    throw DomainError("homogeneous auctions use the limit domain {1}");
  if (2 * config.code_bits + 2 > crypto::bit_length(setup.platform_key().pub().n()))
    throw DomainError("codes do not fit one platform plaintext");
  check_domains(config, profiles);

  const crypto::GroupParams& group = setup.group();
  const crypto::PaillierPublicKey& platform_pk = setup.platform_key().pub();
  const std::int64_t T = config.deadline;
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
  std::map<UserId, Rng> user_rng;
  for (const auto& p : profiles) user_rng.emplace(p.user_id, master.fork());

  auto artifacts = std::make_shared<HArtifacts>();
  artifacts->setup = &setup;
  artifacts->config = config;

  // Round 0: codebooks, OT material and the time-lapse key.
  std::vector<mpq_class> limit_domain = config.limit_domain;
  artifacts->table = crypto::opes_build(config.bid_domain, limit_domain, config.code_bits, ai_rng);
  const crypto::EncodingTable& table = artifacts->table;
  detail::MaskedCodebook bid_ot, limit_ot;
  bid_ot.build(group, table.bids, ai_rng);
  limit_ot.build(group, table.limits, ai_rng);
  crypto::TlcService tlc(group, T + 1, ai_rng);
  {
    ByteWriter w;
    w.bytes(config.serialize()).mpz_fixed(tlc.public_key(), group.element_bytes());
    bid_ot.serialize_into(w);
    limit_ot.serialize_into(w);
    tr.bus.send(kAi, kPlatform, 0, Phase::kSetup, "auction_details", w.size());
    detail::post(tr, kAi, setup.ai_signing(), 0, Phase::kSetup,
                 {PayloadKind::kAuctionDetails, "", std::move(w).take()}, ai_rng);
  }

  // Round 1: each user fetches codes, encrypts, commits and gets a receipt.
  struct UserState {
    mpz_class randomness;
    Bytes commitment;
    crypto::BlindSignature receipt;
    mpz_class receipt_msg;
  };
  std::map<UserId, UserState> users;
  std::vector<PostedCommitment> received;
  const std::size_t ct_width = platform_pk.ciphertext_bytes();
  for (const mech::SensingProfile& p : profiles) {
    const PartyId me = user_party(p.user_id);
    Rng& rng = user_rng.at(p.user_id);
    PartyView& view = tr.view(me);
    mpz_class b_code = detail::fetch_code(tr.bus, group, bid_ot, table.bids.rank(p.bid), me, 1,
                                          Phase::kWinner, rng, ai_rng);
    mpz_class l_code = detail::fetch_code(tr.bus, group, limit_ot,
                                          table.limits.rank(mpq_class(p.limit)), me, 1,
                                          Phase::kWinner, rng, ai_rng);
    view.record(1, Field::kCode, p.user_id, b_code.get_str());
    view.record(1, Field::kCode, p.user_id, l_code.get_str());

    UserState& st = users[p.user_id];
    st.randomness = rng.unit_mod(platform_pk.n());
    crypto::PaillierCiphertext e =
        platform_pk.encrypt((b_code << config.code_bits) + l_code, st.randomness);
    tr.bus.op(me, Phase::kWinner, Op::kPaillierEnc);
    Bytes payload = profile_payload(e, ct_width, rng.bytes(kProofBytes), config.tid);
    st.commitment = crypto::tlc_commit(group, tlc.public_key(), payload, rng).serialize(group);
    tr.bus.op(me, Phase::kWinner, Op::kTlcCommit);
    view.record_bytes(1, Field::kCommitment, p.user_id, st.commitment);

    PostedCommitment br{p.user_id, st.commitment,
                        crypto::schnorr_sign(group, setup.user_signing(p.user_id),
                                             request_bytes(st.commitment, config.tid), rng)};
    tr.bus.op(me, Phase::kWinner, Op::kSign);
    tr.bus.send(me, kPlatform, 1, Phase::kWinner, "bidding_request",
                4 + st.commitment.size() + 2 * 32);
    tr.bus.op(kPlatform, Phase::kWinner, Op::kVerify);
    if (!crypto::schnorr_verify(group, setup.user_signing(p.user_id).y,
                                request_bytes(br.commitment, config.tid), br.request_sig)) {
      tr.log.push_back("bidding request of user " + std::to_string(p.user_id) + " rejected");
      continue;
    }
    tr.view(kPlatform).record_bytes(1, Field::kCommitment, p.user_id, st.commitment);

    // Blind receipt R_i over (c_i | TID | T).
    crypto::BlindSigner signer(group, setup.platform_signing());
    crypto::BlindSignee signee(group, setup.platform_signing().y);
    st.receipt_msg = detail::receipt_message(group, st.commitment, config.tid, T);
    mpz_class r_tilde = signer.commit(platform_rng);
    tr.bus.send(kPlatform, me, 1, Phase::kWinner, "receipt_commit", group.element_bytes());
    mpz_class blinded = signee.blind(st.receipt_msg, r_tilde, rng);
    tr.bus.send(me, kPlatform, 1, Phase::kWinner, "receipt_blinded", 32);
    mpz_class s_tilde = signer.respond(blinded);
    tr.bus.op(kPlatform, Phase::kWinner, Op::kBlindSign);
    tr.bus.send(kPlatform, me, 1, Phase::kWinner, "receipt_response", 32);
    st.receipt = signee.unblind(s_tilde);
    tr.bus.op(me, Phase::kWinner, Op::kVerify);
    if (!crypto::blind_verify(group, setup.platform_signing().y, st.receipt_msg, st.receipt))
      throw VerificationError("platform receipt does not verify");
    view.record(1, Field::kReceipt, p.user_id, st.receipt.r.get_str());
    received.push_back(std::move(br));
  }

  // Round T: the platform posts every received commitment.
  std::optional<UserId> drop_target;
  if (fault.kind == Misbehavior::Kind::kDropCommitment && !received.empty())
    drop_target = fault.target.value_or(received.front().user);
  for (const PostedCommitment& c : received) {
    if (drop_target && c.user == *drop_target) continue;
    detail::post(tr, kPlatform, setup.platform_signing(), T, Phase::kWinner,
                 {PayloadKind::kCommitment, "", commitment_body(group, c)}, platform_rng);
  }
  // Users holding a receipt for a missing commitment appeal to the AI, which
  // checks the receipt and posts the commitment itself.
  {
    auto on_board = posted_commitments(group, *tr.board);
    std::set<UserId> present;
    for (const auto& c : on_board) present.insert(c.user);
    for (const PostedCommitment& c : received) {
      if (present.contains(c.user)) continue;
      const UserState& st = users.at(c.user);
      const PartyId me = user_party(c.user);
      tr.bus.send(me, kAi, T, Phase::kWinner, "appeal", c.commitment.size() + 2 * 64);
      tr.bus.op(kAi, Phase::kWinner, Op::kVerify);
      if (!crypto::blind_verify(group, setup.platform_signing().y,
                                detail::receipt_message(group, c.commitment, config.tid, T),
                                st.receipt)) {
        tr.log.push_back("appeal of user " + std::to_string(c.user) + " rejected");
        continue;
      }
      tr.appeals_upheld.push_back(c.user);
      tr.fines += config.verification.fine;
      tr.log.push_back("appeal of user " + std::to_string(c.user) + " upheld: commitment omitted");
      detail::post(tr, kAi, setup.ai_signing(), T, Phase::kWinner,
                   {PayloadKind::kCommitment, "", commitment_body(group, c)}, ai_rng);
    }
  }

  // Round T+1: key release and decommitment.
  tlc.advance_to(T + 1);
  artifacts->tsk = *tlc.release_key();
  detail::post(tr, kAi, setup.ai_signing(), T + 1, Phase::kWinner,
               {PayloadKind::kKeyRelease, "", mpz_to_bytes(artifacts->tsk)}, ai_rng);

  struct Candidate {
    UserId user;
    mpz_class b_code;
    mpz_class l_code;
  };
  std::vector<Candidate> candidates;
  PartyView& pview = tr.view(kPlatform);
  for (const PostedCommitment& c : posted_commitments(group, *tr.board)) {
    auto reject = [&](const std::string& why) {
      tr.excluded.push_back(c.user);
      tr.log.push_back("user " + std::to_string(c.user) + " excluded: " + why);
    };
    tr.bus.op(kPlatform, Phase::kWinner, Op::kVerify);
    if (!tr.board->is_registered(user_party(c.user)) ||
        !crypto::schnorr_verify(group, setup.user_signing(c.user).y,
                                request_bytes(c.commitment, config.tid), c.request_sig)) {
      reject("bad request signature");
      continue;
    }
    try {
      tr.bus.op(kPlatform, Phase::kWinner, Op::kTlcOpen);
      Bytes payload = crypto::tlc_open_with_key(
          group, artifacts->tsk, crypto::TlcCommitment::deserialize(group, c.commitment));
      OpenedProfile opened = parse_profile_payload(payload);
      if (opened.tid != config.tid) throw DecryptionError("commitment for another auction");
      pview.record_bytes(T + 1, Field::kDecommitment, c.user, payload);
      tr.bus.op(kPlatform, Phase::kWinner, Op::kPaillierDec);
      auto [b_code, l_code] = unpack_codes(setup.platform_key().decrypt(opened.e), config.code_bits);
      pview.record(T + 1, Field::kCode, c.user, b_code.get_str());
      candidates.push_back({c.user, b_code, l_code});
    } catch (const Error& e) {
      reject(e.what());
    }
  }

  // Data-independent sort: every code is ranked against every other.
  const std::size_t n = candidates.size();
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Candidate& a = candidates[j];
      const Candidate& b = candidates[i];
      if (a.b_code < b.b_code || (a.b_code == b.b_code && a.user < b.user)) ++rank[i];
    }
  tr.bus.op(kPlatform, Phase::kWinner, Op::kSortCompare, n * (n > 0 ? n - 1 : 0));
  std::vector<const Candidate*> order(n);
  for (std::size_t i = 0; i < n; ++i) order[rank[i]] = &candidates[i];
  if (fault.kind == Misbehavior::Kind::kForgeRank && n >= 2) std::swap(order[0], order[1]);

  // Winner selection with OPENS^{-1} requests, one rank at a time.
  const bool heterogeneous = config.model == mech::JobModel::kHeterogeneous;
  auto opens = [&](const crypto::OrderCodebook& book, const mpz_class& code) -> std::optional<mpq_class> {
    tr.bus.send(kPlatform, kAi, T + 1, Phase::kWinner, "opens_request", (config.code_bits + 7) / 8);
    std::optional<mpq_class> out;
    try {
      out = book.decode(code);
    } catch (const LookupError&) {
    }
    tr.bus.send(kAi, kPlatform, T + 1, Phase::kWinner, "opens_response", out ? 16 : 1);
    return out;
  };
  mech::AuctionOutcome outcome;
  std::uint64_t total = 0;
  std::optional<mpq_class> failing_bid;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const Candidate& c = *order[r];
    auto bid = opens(table.bids, c.b_code);
    std::optional<mpq_class> limit = mpq_class(1);
    if (heterogeneous) limit = opens(table.limits, c.l_code);
    if (!bid || !limit) {
      tr.excluded.push_back(c.user);
      tr.log.push_back("user " + std::to_string(c.user) + " excluded: code outside the codebook");
      continue;
    }
    std::uint32_t l = static_cast<std::uint32_t>(limit->get_num().get_ui());
    if (config.budget <= 0 ||
        *bid * mpq_class(mpz_class(static_cast<unsigned long>(total + l))) > config.budget) {
      // Decoded by code only; the record carries no identity.
      pview.record(T + 1, Field::kBid, std::nullopt, detail::fraction(*bid));
      if (heterogeneous) pview.record(T + 1, Field::kLimit, std::nullopt, limit->get_str());
      tr.failing_rank = r + 1;
      failing_bid = *bid;
      break;
    }
    pview.record(T + 1, Field::kBid, c.user, detail::fraction(*bid));
    if (heterogeneous) pview.record(T + 1, Field::kLimit, c.user, limit->get_str());
    mpq_class slack = (config.budget - *bid * mpq_class(mpz_class(static_cast<unsigned long>(total)))) / *bid;
    mpz_class tau;
    mpz_fdiv_q(tau.get_mpz_t(), slack.get_num_mpz_t(), slack.get_den_mpz_t());
    std::uint32_t f = tau < l ? static_cast<std::uint32_t>(tau.get_ui()) : l;
    outcome.winners.push_back(c.user);
    outcome.allocation[c.user] = f;
    total += f;
  }

  // Payment determination.
  if (!outcome.winners.empty()) {
    mpq_class price = config.budget / mpq_class(mpz_class(static_cast<unsigned long>(total)));
    if (failing_bid && *failing_bid < price) price = *failing_bid;
    outcome.per_job_price = price;
    std::optional<UserId> underpaid;
    if (fault.kind == Misbehavior::Kind::kUnderpay)
      underpaid = fault.target.value_or(outcome.winners.front());
    const crypto::PaillierPublicKey& ai_pk = setup.ai_key().pub();
    ByteWriter record;
    record.u32(static_cast<std::uint32_t>(outcome.winners.size()));
    for (UserId id : outcome.winners) {
      mpq_class pay = price * outcome.allocation[id];
      if (underpaid && *underpaid == id) pay -= fault.delta;
      outcome.payments[id] = pay;
      tr.bus.send(kPlatform, user_party(id), T + 1, Phase::kPayment, "payment", 32);
      tr.view(user_party(id)).record(T + 1, Field::kPayment, id, detail::fraction(pay));
      tr.view(user_party(id)).record(T + 1, Field::kAllocation, id, std::to_string(outcome.allocation[id]));
      mpq_class clipped = pay < 0 ? mpq_class(0) : pay;
      record.u32(id).u32(outcome.allocation[id]);
      record.bytes(ai_pk.encrypt(clipped.get_num(), platform_rng).serialize(ai_pk.ciphertext_bytes()));
      record.bytes(ai_pk.encrypt(clipped.get_den(), platform_rng).serialize(ai_pk.ciphertext_bytes()));
      tr.bus.op(kPlatform, Phase::kPayment, Op::kPaillierEnc, 2);
    }
    detail::post(tr, kPlatform, setup.platform_signing(), T + 1, Phase::kPayment,
                 {PayloadKind::kOutcomeRecord, "", std::move(record).take()}, platform_rng);
  } else {
    ByteWriter record;
    record.u32(0);
    detail::post(tr, kPlatform, setup.platform_signing(), T + 1, Phase::kPayment,
                 {PayloadKind::kOutcomeRecord, "", std::move(record).take()}, platform_rng);
  }
  tr.outcome = std::move(outcome);

  for (const auto& [id, st] : users) artifacts->randomness[id] = st.randomness;

  // Round T+2: audits.
  if (options.run_verification) {
    mpq_class alpha = options.audit_probability.value_or(config.verification.alpha);
    for (const mech::SensingProfile& p : profiles) {
      if (!audit_rng.bernoulli(alpha)) continue;
      const PartyId me = user_party(p.user_id);
      tr.bus.send(me, kAi, T + 2, Phase::kVerification, "audit_request", 8);
      for (const auto& [id, st] : users) {
        tr.bus.send(kAi, user_party(id), T + 2, Phase::kVerification, "randomness_request", 8);
        tr.bus.send(user_party(id), kAi, T + 2, Phase::kVerification, "randomness",
                    platform_pk.ciphertext_bytes() / 2);
        tr.view(kAi).record(T + 2, Field::kRandomness, id, st.randomness.get_str(16));
      }
      VerifyResult result = artifacts->audit(p.user_id, tr, &tr.bus);
      tr.bus.send(kAi, me, T + 2, Phase::kVerification, "audit_result", 64);
      if (!result.confirmed()) {
        tr.fines += config.verification.fine;
        tr.log.push_back("audit by user " + std::to_string(p.user_id) + ": discrepancy, expected " +
                         detail::fraction(result.expected) + " observed " +
                         detail::fraction(result.observed));
      }
      tr.audits.push_back({p.user_id, std::move(result)});
    }
  }

  tr.artifacts = artifacts;
  tr.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return tr;
}

}  // namespace pvi::protocol
