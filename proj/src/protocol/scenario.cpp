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
#include "pvi/protocol/scenario.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"
#include "pvi/mech/text_format.hpp"

namespace pvi::protocol {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer: " + std::string(s));
  return v;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  sc.source = std::string(text);
  std::optional<mpq_class> alpha, fine, pmax;
  std::string profile_lines;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key(trim(line.substr(0, eq)));
    std::string_view value = trim(line.substr(eq + 1));
    if (key != "profile" && !seen.insert(key).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key " + key);
    try {
      if (key == "model") {
        sc.config.model = mech::parse_job_model(value);
      } else if (key == "tid") {
        sc.config.tid = std::string(value);
      } else if (key == "budget") {
        sc.config.budget = parse_rational(value);
      } else if (key == "deadline") {
        sc.config.deadline = static_cast<std::int64_t>(parse_u64(value));
      } else if (key == "bids" || key == "limits") {
        std::vector<mpq_class> values;
        for (std::string_view v : split_list(value)) values.push_back(parse_rational(v));
        (key == "bids" ? sc.config.bid_domain : sc.config.limit_domain) = std::move(values);
      } else if (key == "ground" || key == "n") {
        std::vector<std::size_t> values;
        for (std::string_view v : split_list(value)) values.push_back(parse_u64(v));
        (key == "n" ? sc.users : sc.grounds) = std::move(values);
      } else if (key == "alpha") {
        alpha = parse_rational(value);
      } else if (key == "fine") {
        fine = parse_rational(value);
      } else if (key == "pmax") {
        pmax = parse_rational(value);
      } else if (key == "seed") {
        sc.config.seed = parse_u64(value);
      } else if (key == "code_bits") {
        sc.config.code_bits = static_cast<unsigned>(parse_u64(value));
      } else if (key == "paillier_bits") {
        sc.setup.paillier_bits = static_cast<unsigned>(parse_u64(value));
      } else if (key == "group_bits") {
        sc.setup.group_bits = static_cast<unsigned>(parse_u64(value));
      } else if (key == "subgroup_bits") {
        sc.setup.subgroup_bits = static_cast<unsigned>(parse_u64(value));
      } else if (key == "trials") {
        sc.trials = parse_u64(value);
      } else if (key == "inclusion") {
        sc.inclusion = parse_rational(value);
      } else if (key == "profile") {
        profile_lines += std::string(value) + "\n";
      } else {
        throw ParseError("unknown key " + key);
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const DomainError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (sc.config.bid_domain.empty()) throw ParseError("scenario needs a bid domain");
  if (!sc.grounds.empty()) sc.config.ground_size = sc.grounds.front();
  if (!profile_lines.empty()) sc.profiles = mech::parse_profiles(profile_lines, sc.config.model);
  if (sc.inclusion <= 0 || sc.inclusion > 1) throw DomainError("inclusion probability outside (0, 1]");

  mpq_class p = pmax.value_or(sc.config.budget > 0 ? sc.config.budget : mpq_class(1));
  mpq_class f = fine.value_or(9 * p);
  sc.config.verification.p_max = p;
  sc.config.verification.fine = f;
  sc.config.verification.alpha = alpha.value_or(VerificationPolicy::threshold(f, p));
  sc.setup.seed = sc.config.seed;
  sc.config.validate();
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read scenario " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace pvi::protocol
