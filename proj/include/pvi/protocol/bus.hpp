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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pvi::protocol {

using PartyId = std::string;

inline const PartyId kPlatform = "platform";
inline const PartyId kAi = "ai";
inline const PartyId kMpep = "mpep";
inline const PartyId kBoard = "board";
PartyId user_party(std::uint32_t id);

enum class Phase : std::uint8_t { kSetup, kWinner, kPayment, kVerification };
inline constexpr std::size_t kPhaseCount = 4;
std::string_view phase_name(Phase phase);

enum class Op : std::uint8_t {
  kPaillierEnc,
  kPaillierDec,
  kPaillierExp,
  kOtQuery,
  kOtRespond,
  kOtRecover,
  kTlcCommit,
  kTlcOpen,
  kSign,
  kVerify,
  kBlindSign,
  kCompare,
  kSortCompare,
  kPsuEval,
  kMpepShare,
};
inline constexpr std::size_t kOpCount = 15;
std::string_view op_name(Op op);

struct MessageRecord {
  PartyId sender;
  PartyId receiver;
  std::int64_t round = 0;
  Phase phase = Phase::kSetup;
  std::string kind;
  std::size_t bytes = 0;
};

struct PartyPhaseCounters {
  std::uint64_t messages_sent = 0;
  std::uint64_t bytes_sent = 0;
  std::uint64_t messages_received = 0;
  std::uint64_t bytes_received = 0;
  std::array<std::uint64_t, kOpCount> ops{};
};

class Counters {
 public:
  void message(const MessageRecord& m);
  void op(const PartyId& party, Phase phase, Op op, std::uint64_t count = 1);

  const PartyPhaseCounters& at(const PartyId& party, Phase phase) const;
  std::uint64_t bytes_sent(const PartyId& party, Phase phase) const { return at(party, phase).bytes_sent; }
  std::uint64_t ops(const PartyId& party, Phase phase, Op op) const;
  std::uint64_t total_ops(const PartyId& party, Op op) const;
  std::uint64_t total_bytes_sent() const;
  std::uint64_t total_bytes_received() const;
  // Sums every party whose id starts with the prefix ("user:" for all users).
  std::uint64_t bytes_sent_by_prefix(std::string_view prefix, Phase phase) const;
  std::uint64_t ops_by_prefix(std::string_view prefix, Phase phase, Op op) const;

  // party,phase,messages_sent,bytes_sent,messages_received,bytes_received,<ops>
  std::string csv() const;
  static std::string csv_header();

 private:
  std::map<std::pair<PartyId, Phase>, PartyPhaseCounters> rows_;
};

// Deterministic in-process delivery: every message is logged with its size
// and attributed to sender and receiver.
class Bus {
 public:
  void send(const PartyId& from, const PartyId& to, std::int64_t round, Phase phase,
            std::string kind, std::size_t bytes);
  void op(const PartyId& party, Phase phase, Op op, std::uint64_t count = 1) {
    counters_.op(party, phase, op, count);
  }

  const std::vector<MessageRecord>& messages() const { return messages_; }
  const Counters& counters() const { return counters_; }
  Counters& counters() { return counters_; }

 private:
  std::vector<MessageRecord> messages_;
  Counters counters_;
};

}  // namespace pvi::protocol
