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

#include <set>

#include "pvi/common/errors.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/bigint.hpp"
#include "pvi/crypto/blind_nr.hpp"
#include "pvi/crypto/group.hpp"
#include "pvi/crypto/hash.hpp"
#include "pvi/crypto/opes.hpp"
#include "pvi/crypto/ot.hpp"
#include "pvi/crypto/paillier.hpp"
#include "pvi/crypto/schnorr.hpp"
#include "pvi/crypto/tlc.hpp"
#include "stats.hpp"

namespace pvi::crypto {
namespace {

const GroupParams& group() { return shared_group(); }

Bytes as_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

TEST(Hash, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex(as_bytes("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Group, SharedGroupIsValid) {
  const GroupParams& g = group();
  EXPECT_NO_THROW(g.validate());
  EXPECT_EQ(bit_length(g.p), 512u);
  EXPECT_EQ(bit_length(g.q), 256u);
  EXPECT_NE(g.g, g.h);
  EXPECT_TRUE(g.contains(g.g));
  EXPECT_TRUE(g.contains(g.h));
  EXPECT_FALSE(g.contains(g.p - 1));
  EXPECT_EQ(GroupParams::deserialize(g.serialize()), g);
}

TEST(Group, GenerationIsDeterministic) {
  Rng a(9), b(9);
  EXPECT_EQ(generate_group(256, 160, a), generate_group(256, 160, b));
}

// Values computed independently from (1 + m n) r^n mod n^2.
TEST(Paillier, MatchesIndependentEncryption) {
  PaillierKeypair key(mpz_class("2147483647"), mpz_class("2147483629"));
  EXPECT_EQ(key.pub().n(), mpz_class("4611685975477714963"));
  auto c = key.pub().encrypt(42, mpz_class(123456789));
  EXPECT_EQ(c.value, mpz_class("17491415599860944527295664655562241311"));
  EXPECT_EQ(key.decrypt(c), 42);
  auto c7 = key.pub().encrypt(7, mpz_class(987654321));
  EXPECT_EQ(c7.value, mpz_class("14062708011314548939786448813616640819"));
  EXPECT_EQ(key.randomness_of(c7), 987654321);
  EXPECT_EQ(key.pub().open_with_randomness(c7, mpz_class(987654321)), 7);
  EXPECT_THROW(key.pub().open_with_randomness(c7, mpz_class(987654322)), DecryptionError);
}

TEST(Paillier, SmallKeyRoundTrip) {
  PaillierKeypair key = paillier_keygen(64, 1);
  EXPECT_EQ(bit_length(key.pub().n()), 64u);
  Rng rng(1);
  EXPECT_EQ(key.decrypt(key.pub().encrypt(0, rng)), 0);
}

TEST(Paillier, HomomorphicIdentities) {
  PaillierKeypair key = paillier_keygen(512, 7);
  const PaillierPublicKey& pk = key.pub();
  Rng rng(3);
  EXPECT_EQ(key.decrypt(pk.add(pk.encrypt(3, rng), pk.encrypt(4, rng))), 7);
  EXPECT_EQ(key.decrypt(pk.scale(pk.encrypt(2, rng), 3)), 6);
  EXPECT_EQ(key.decrypt(pk.add(pk.encrypt(1, rng), pk.encrypt(1, rng))), 2);
  EXPECT_EQ(key.decrypt(pk.scale(pk.encrypt(7, rng), 0)), 0);
  EXPECT_EQ(key.decrypt(pk.encrypt(pk.n() - 1, rng)), pk.n() - 1);
  EXPECT_EQ(key.decrypt_signed(pk.negate(pk.encrypt(5, rng))), -5);
  EXPECT_EQ(key.decrypt(pk.add_plain(pk.encrypt(5, rng), 9)), 14);
  auto c = pk.encrypt(11, rng);
  auto c2 = pk.rerandomize(c, rng);
  EXPECT_NE(c.value, c2.value);
  EXPECT_EQ(key.decrypt(c2), 11);
}

TEST(Paillier, FreshRandomnessGivesDistinctCiphertexts) {
  PaillierKeypair key = paillier_keygen(512, 7);
  Rng rng(4);
  EXPECT_NE(key.pub().encrypt(5, rng).value, key.pub().encrypt(5, rng).value);
}

TEST(Paillier, RandomAddScaleAgainstPlaintext) {
  PaillierKeypair key = paillier_keygen(512, 11);
  const PaillierPublicKey& pk = key.pub();
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    mpz_class a = rng.below(pk.n()), b = rng.below(pk.n()), c = rng.below(pk.n());
    mpz_class expected = mod(a + b * c, pk.n());
    EXPECT_EQ(key.decrypt(pk.add(pk.encrypt(a, rng), pk.scale(pk.encrypt(b, rng), c))), expected);
  }
}

TEST(Paillier, RejectsForeignCiphertexts) {
  PaillierKeypair k1 = paillier_keygen(256, 1), k2 = paillier_keygen(256, 2);
  Rng rng(1);
  auto c = k1.pub().encrypt(1, rng);
  EXPECT_THROW(k2.pub().add(c, k2.pub().encrypt(1, rng)), UsageError);
}

TEST(Paillier, KeySerializationRoundTrip) {
  PaillierKeypair key = paillier_keygen(256, 5);
  PaillierKeypair back = PaillierKeypair::deserialize(key.serialize());
  EXPECT_EQ(back.pub().n(), key.pub().n());
  Rng rng(2);
  EXPECT_EQ(back.decrypt(key.pub().encrypt(99, rng)), 99);
  EXPECT_EQ(PaillierPublicKey::deserialize(key.pub().serialize()).key_id(), key.pub().key_id());
}

TEST(Schnorr, SignVerifyAndTamper) {
  Rng rng(8);
  SigningKey key = generate_signing_key(group(), rng);
  Bytes msg = as_bytes("commitment");
  SchnorrSignature sig = schnorr_sign(group(), key, msg, rng);
  EXPECT_TRUE(schnorr_verify(group(), key.y, msg, sig));
  EXPECT_FALSE(schnorr_verify(group(), key.y, as_bytes("commitmenu"), sig));
  SchnorrSignature bad = sig;
  bad.s += 1;
  EXPECT_FALSE(schnorr_verify(group(), key.y, msg, bad));
  EXPECT_EQ(sig.serialize(group()).size(), 64u);
}

// Nyberg-Rueppel signature (r, s) = (m g^k, x r + k) over p = 2039, q = 1019,
// g = 4 with x = 77, k = 33, computed by hand-checked script.
TEST(BlindNr, VerifiesIndependentSignature) {
  GroupParams tiny{2039, 1019, 4, 9};
  mpz_class y = powm(4, 77, 2039);
  EXPECT_EQ(y, 360);
  EXPECT_TRUE(blind_verify(tiny, y, 5, {388, 358}));
  EXPECT_FALSE(blind_verify(tiny, y, 5, {388, 359}));
  EXPECT_FALSE(blind_verify(tiny, y, 6, {388, 358}));
}

TEST(BlindNr, SignThenVerify) {
  Rng rng(21);
  SigningKey key = generate_signing_key(group(), rng);
  for (int t = 0; t < 50; ++t) {
    mpz_class m = 1 + rng.below(group().q - 1);
    BlindSignature sig = blind_sign(group(), key, m, rng);
    EXPECT_TRUE(blind_verify(group(), key.y, m, sig));
    BlindSignature bad = sig;
    bad.s = mod(bad.s + 1, group().q);
    EXPECT_FALSE(blind_verify(group(), key.y, m, bad));
  }
}

TEST(BlindNr, ScaleMessage) {
  EXPECT_EQ(scale_message(mpq_class(3, 2)), 15000);
  EXPECT_EQ(scale_message(mpq_class(1, 3), 2), 33);
}

// The signer's view (commitment, blinded message) carries no information on
// which of two messages is being signed.
TEST(BlindNr, SignerTranscriptsIndependentOfMessage) {
  Rng rng(22);
  SigningKey key = generate_signing_key(group(), rng);
  const mpz_class m1 = 1000, m2 = 2000;
  std::vector<std::size_t> h1(16), h2(16);
  std::size_t correct = 0;
  for (int t = 0; t < 1000; ++t) {
    bool second = rng.bernoulli(mpq_class(1, 2));
    BlindSigner signer(group(), key);
    BlindSignee signee(group(), key.y);
    mpz_class r_tilde = signer.commit(rng);
    mpz_class blinded = signee.blind(second ? m2 : m1, r_tilde, rng);
    unsigned bucket = static_cast<unsigned>(mpz_class(blinded % 16).get_ui());
    (second ? h2 : h1)[bucket]++;
    // Guess from the parity of the blinded message.
    bool guess = mpz_odd_p(blinded.get_mpz_t());
    correct += guess == second ? 1 : 0;
    BlindSignature sig = signee.unblind(signer.respond(blinded));
    EXPECT_TRUE(blind_verify(group(), key.y, second ? m2 : m1, sig));
  }
  EXPECT_GT(pvi::testing::two_sample_p_value(h1, h2), 0.01);
  // 3 sigma around 500 for 1000 fair guesses.
  EXPECT_NEAR(static_cast<double>(correct), 500.0, 48.0);
}

std::vector<mpz_class> group_messages(std::size_t z) {
  std::vector<mpz_class> out;
  for (std::size_t i = 1; i <= z; ++i) out.push_back(powm(group().g, mpz_class(static_cast<unsigned long>(100 + i)), group().p));
  return out;
}

TEST(Ot, DeliversTheChosenMessage) {
  Rng rng(31);
  auto msgs = group_messages(4);
  EXPECT_EQ(ot_transfer(msgs, 2, group(), rng), msgs[1]);
  auto one = group_messages(1);
  EXPECT_EQ(ot_transfer(one, 1, group(), rng), one[0]);
  for (std::size_t a = 1; a <= 4; ++a) EXPECT_EQ(ot_transfer(msgs, a, group(), rng), msgs[a - 1]);
  EXPECT_THROW(ot_transfer(msgs, 5, group(), rng), DomainError);
  EXPECT_THROW(ot_transfer(msgs, 0, group(), rng), DomainError);
}

TEST(Ot, QueriesIndistinguishableAcrossChoices) {
  Rng rng(32);
  std::vector<std::size_t> h1(16), h2(16);
  for (int t = 0; t < 10000; ++t) {
    OtReceiverState s1, s2;
    mpz_class y1 = ot_query(group(), 1, 4, rng, s1).y;
    mpz_class y2 = ot_query(group(), 2, 4, rng, s2).y;
    h1[mpz_class(y1 % 16).get_ui()]++;
    h2[mpz_class(y2 % 16).get_ui()]++;
  }
  EXPECT_GT(pvi::testing::two_sample_p_value(h1, h2), 0.01);
}

TEST(Ot, MaskIsAnInvolution) {
  mpz_class key = powm(group().g, 12345, group().p);
  mpz_class masked = mask_code(group(), key, 777, 32);
  EXPECT_NE(masked, 777);
  EXPECT_EQ(mask_code(group(), key, masked, 32), 777);
  EXPECT_LT(masked, mpz_class(1) << 32);
}

TEST(Opes, OrderPreservingRoundTrip) {
  EncodingTable t = opes_build({1, 3, 7}, {1, 2}, 32, 5);
  const auto& c = t.bids.codes();
  ASSERT_EQ(c.size(), 3u);
  EXPECT_LT(c[0], c[1]);
  EXPECT_LT(c[1], c[2]);
  EXPECT_LT(t.bids.encode(3), t.bids.encode(7));
  for (int x : {1, 3, 7}) EXPECT_EQ(t.bids.decode(t.bids.encode(x)), x);
  EXPECT_EQ(t.bids.rank(7), 2u);
  EXPECT_THROW(t.bids.encode(2), DomainError);
  EXPECT_THROW(t.bids.decode(c[0] + 1 == c[1] ? mpz_class(0) : c[0] + 1), LookupError);
  EncodingTable back = EncodingTable::deserialize(t.serialize());
  EXPECT_EQ(back.bids.codes(), t.bids.codes());
  EXPECT_EQ(back.limits.domain(), t.limits.domain());
}

TEST(Opes, DeterministicInSeedAndRejectsNarrowCodes) {
  EXPECT_EQ(opes_build({1, 2}, {1}, 16, 3).bids.codes(), opes_build({1, 2}, {1}, 16, 3).bids.codes());
  std::vector<mpq_class> wide;
  for (int i = 1; i <= 100; ++i) wide.push_back(i);
  EXPECT_THROW(opes_build(wide, {1}, 8, 1), DomainError);
}

TEST(Tlc, CommitOpenAfterRelease) {
  Rng rng(41);
  TlcService svc(group(), 3, rng);
  Bytes payload = as_bytes("bid code and proof");
  TlcCommitment c = svc.commit(payload, rng);
  svc.advance_to(2);
  EXPECT_THROW(svc.open(c), TimingError);
  EXPECT_FALSE(svc.release_key());
  svc.advance_to(3);
  EXPECT_EQ(svc.open(c), payload);
  EXPECT_EQ(tlc_open_with_key(group(), *svc.release_key(), c), payload);
  EXPECT_THROW(svc.commit(payload, rng), TimingError);
  EXPECT_THROW(svc.advance_to(1), UsageError);
}

TEST(Tlc, TamperedCommitmentFailsToOpen) {
  Rng rng(42);
  TlcService svc(group(), 1, rng);
  Bytes ser = svc.commit(as_bytes("payload"), rng).serialize(group());
  svc.advance_to(1);
  EXPECT_EQ(svc.open(ser), as_bytes("payload"));
  for (std::size_t pos : {std::size_t{3}, ser.size() / 2, ser.size() - 1}) {
    Bytes bad = ser;
    bad[pos] ^= 0x01;
    EXPECT_THROW(svc.open(bad), DecryptionError) << pos;
  }
}

TEST(Tlc, FixedWidthForFixedPayload) {
  Rng rng(43);
  TlcService svc(group(), 1, rng);
  std::set<std::size_t> widths;
  for (int i = 0; i < 20; ++i) widths.insert(svc.commit(Bytes(40, static_cast<std::uint8_t>(i)), rng).serialize(group()).size());
  EXPECT_EQ(widths.size(), 1u);
}

}  // namespace
}  // namespace pvi::crypto
