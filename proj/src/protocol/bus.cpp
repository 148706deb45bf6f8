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
#include "pvi/protocol/bus.hpp"

#include <sstream>

namespace pvi::protocol {

PartyId user_party(std::uint32_t id) { return "user:" + std::to_string(id); }

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kSetup: return "setup";
    case Phase::kWinner: return "winner";
    case Phase::kPayment: return "payment";
    case Phase::kVerification: return "verification";
  }
  return "unknown";
}

std::string_view op_name(Op op) {
  static constexpr std::array<std::string_view, kOpCount> names = {
      "paillier_enc", "paillier_dec", "paillier_exp", "ot_query",     "ot_respond",
      "ot_recover",   "tlc_commit",   "tlc_open",     "sign",         "verify",
      "blind_sign",   "compare",      "sort_compare", "psu_eval",     "mpep_share"};
  return names[static_cast<std::size_t>(op)];
}

void Counters::message(const MessageRecord& m) {
  auto& s = rows_[{m.sender, m.phase}];
  ++s.messages_sent;
  s.bytes_sent += m.bytes;
  auto& r = rows_[{m.receiver, m.phase}];
  ++r.messages_received;
  r.bytes_received += m.bytes;
}

void Counters::op(const PartyId& party, Phase phase, Op op, std::uint64_t count) {
  rows_[{party, phase}].ops[static_cast<std::size_t>(op)] += count;
}

const PartyPhaseCounters& Counters::at(const PartyId& party, Phase phase) const {
  static const PartyPhaseCounters kEmpty{};
  auto it = rows_.find({party, phase});
  return it == rows_.end() ? kEmpty : it->second;
}

std::uint64_t Counters::ops(const PartyId& party, Phase phase, Op op) const {
  return at(party, phase).ops[static_cast<std::size_t>(op)];
}

std::uint64_t Counters::total_ops(const PartyId& party, Op op) const {
  std::uint64_t sum = 0;
  for (std::size_t p = 0; p < kPhaseCount; ++p) sum += ops(party, static_cast<Phase>(p), op);
  return sum;
}

std::uint64_t Counters::total_bytes_sent() const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : rows_) sum += c.bytes_sent;
  return sum;
}

std::uint64_t Counters::total_bytes_received() const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : rows_) sum += c.bytes_received;
  return sum;
}

std::uint64_t Counters::bytes_sent_by_prefix(std::string_view prefix, Phase phase) const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : rows_)
    if (key.second == phase && key.first.starts_with(prefix)) sum += c.bytes_sent;
  return sum;
}

std::uint64_t Counters::ops_by_prefix(std::string_view prefix, Phase phase, Op op) const {
  std::uint64_t sum = 0;
  for (const auto& [key, c] : rows_)
    if (key.second == phase && key.first.starts_with(prefix)) sum += c.ops[static_cast<std::size_t>(op)];
  return sum;
}

std::string Counters::csv_header() {
  std::string out = "party,phase,messages_sent,bytes_sent,messages_received,bytes_received";
  for (std::size_t i = 0; i < kOpCount; ++i) out += "," + std::string(op_name(static_cast<Op>(i)));
  return out;
}

std::string Counters::csv() const {
  std::ostringstream out;
  out << csv_header() << '\n';
  for (const auto& [key, c] : rows_) {
    out << key.first << ',' << phase_name(key.second) << ',' << c.messages_sent << ','
        << c.bytes_sent << ',' << c.messages_received << ',' << c.bytes_received;
    for (std::uint64_t v : c.ops) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

void Bus::send(const PartyId& from, const PartyId& to, std::int64_t round, Phase phase,
               std::string kind, std::size_t bytes) {
  messages_.push_back({from, to, round, phase, std::move(kind), bytes});
  counters_.message(messages_.back());
}

}  // namespace pvi::protocol
