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

#include "pvi/board/bulletin.hpp"
#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"
#include "pvi/crypto/group.hpp"
#include "pvi/crypto/schnorr.hpp"

namespace pvi::board {
namespace {

class BoardTest : public ::testing::Test {
 protected:
  const crypto::GroupParams& group = crypto::shared_group();
  Rng rng{3};
  crypto::SigningKey alice = crypto::generate_signing_key(group, rng);
  crypto::SigningKey mallory = crypto::generate_signing_key(group, rng);
  BulletinBoard board{group};

  void SetUp() override { board.register_author("alice", alice.y); }

  Payload payload(PayloadKind kind, std::string list, std::string body) {
    return Payload{kind, std::move(list), Bytes(body.begin(), body.end())};
  }
};

TEST_F(BoardTest, AppendsInSequence) {
  auto s1 = board.sign_and_post("alice", alice, 0, payload(PayloadKind::kAuctionDetails, "", "a"), rng);
  auto s2 = board.sign_and_post("alice", alice, 1, payload(PayloadKind::kListAppend, "lw/1", "b"), rng);
  auto s3 = board.sign_and_post("alice", alice, 1, payload(PayloadKind::kListAppend, "lw/1", "c"), rng);
  EXPECT_EQ(s1, 1u);
  EXPECT_EQ(s2, 2u);
  EXPECT_EQ(s3, 3u);
  EXPECT_EQ(board.read_list("lw/1").entries, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(board.read_range(2, 10).size(), 2u);
  EXPECT_EQ(board.payload_bytes(), 3u);
  EXPECT_EQ(board.list_ids(), (std::vector<std::string>{"lw/1"}));
  EXPECT_TRUE(board.replay_verify());
}

TEST_F(BoardTest, RejectsForgedAndUnregistered) {
  Payload p = payload(PayloadKind::kCommitment, "", "x");
  auto forged = crypto::schnorr_sign(group, mallory, signing_bytes(1, 0, "alice", p), rng);
  EXPECT_FALSE(board.post("alice", 0, p, forged));
  EXPECT_FALSE(board.sign_and_post("mallory", mallory, 0, p, rng));
  EXPECT_EQ(board.size(), 0u);
  EXPECT_EQ(board.rejections().size(), 2u);
}

TEST_F(BoardTest, FirstOfIgnoresLaterDuplicates) {
  board.sign_and_post("alice", alice, 0, payload(PayloadKind::kCommitment, "", "one"), rng);
  board.sign_and_post("alice", alice, 0, payload(PayloadKind::kCommitment, "", "two"), rng);
  const BulletinEntry* e = board.first_of(PayloadKind::kCommitment, "alice");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->payload.body, Bytes({'o', 'n', 'e'}));
  EXPECT_EQ(board.of_kind(PayloadKind::kCommitment).size(), 2u);
  EXPECT_EQ(board.first_of(PayloadKind::kKeyRelease, "alice"), nullptr);
}

TEST_F(BoardTest, TamperingBreaksReplay) {
  board.sign_and_post("alice", alice, 0, payload(PayloadKind::kOutcomeRecord, "", "pay"), rng);
  auto before = board.snapshot();
  board.mutable_entry_for_testing(1).payload.body[0] ^= 1;
  EXPECT_FALSE(board.replay_verify());
  EXPECT_NE(board.snapshot(), before);
}

TEST_F(BoardTest, DumpHasOneLinePerEntry) {
  board.sign_and_post("alice", alice, 0, payload(PayloadKind::kAuctionDetails, "", "a"), rng);
  board.sign_and_post("alice", alice, 2, payload(PayloadKind::kKeyRelease, "", "k"), rng);
  std::string d = board.dump();
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 2);
  EXPECT_NE(d.find(std::string(tag(PayloadKind::kKeyRelease))), std::string::npos);
}

TEST(ListNames, AreDistinct) {
  EXPECT_NE(winner_list(1), winner_list(2));
  EXPECT_NE(payment_list(1, 2), payment_list(2, 1));
  EXPECT_NE(winner_state_list(1), platform_winner_list());
}

}  // namespace
}  // namespace pvi::board
