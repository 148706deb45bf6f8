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
#include "pvi/mech/text_format.hpp"

#include <sstream>
#include <string>

#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"

namespace pvi::mech {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> fields_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

std::uint32_t parse_u32(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9)
    throw ParseError("expected an unsigned integer: " + s);
  return static_cast<std::uint32_t>(std::stoul(s));
}

template <typename Fn>
void for_each_record(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> fields = fields_of(line);
    if (fields.empty()) continue;
    try {
      fn(fields);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace

std::string format_profiles(const std::vector<SensingProfile>& profiles, JobModel model) {
  std::ostringstream out;
  for (const SensingProfile& p : profiles) {
    out << p.user_id << ' ' << format_fraction(p.bid) << ' ';
    if (model == JobModel::kSubmodular) {
      for (std::size_t i = 0; i < p.assignments.size(); ++i)
        out << (i ? "," : "") << p.assignments[i];
    } else {
      out << p.limit;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<SensingProfile> parse_profiles(std::string_view text, JobModel model) {
  std::vector<SensingProfile> out;
  for_each_record(text, [&](const std::vector<std::string>& f) {
    if (f.size() != 3) throw ParseError("expected: user_id bid limit-or-assignments");
    SensingProfile p;
    p.user_id = parse_u32(f[0]);
    p.bid = parse_rational(f[1]);
    if (model == JobModel::kSubmodular) {
      for (const std::string& a : split(f[2], ',')) p.assignments.push_back(parse_u32(a));
    } else {
      p.limit = parse_u32(f[2]);
    }
    out.push_back(std::move(p));
  });
  return out;
}

std::string format_outcome(const AuctionOutcome& outcome) {
  std::ostringstream out;
  if (outcome.per_job_price) out << "price " << format_fraction(*outcome.per_job_price) << '\n';
  for (UserId id : outcome.winners)
    out << id << ' ' << outcome.allocation.at(id) << ' ' << format_fraction(outcome.payments.at(id))
        << '\n';
  return out.str();
}

AuctionOutcome parse_outcome(std::string_view text) {
  AuctionOutcome out;
  for_each_record(text, [&](const std::vector<std::string>& f) {
    if (f.size() == 2 && f[0] == "price") {
      out.per_job_price = parse_rational(f[1]);
      return;
    }
    if (f.size() != 3) throw ParseError("expected: user_id f payment");
    UserId id = parse_u32(f[0]);
    if (out.payments.contains(id)) throw ParseError("duplicate winner " + f[0]);
    out.winners.push_back(id);
    out.allocation[id] = parse_u32(f[1]);
    out.payments[id] = parse_rational(f[2]);
  });
  return out;
}

}  // namespace pvi::mech
