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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pvi/mech/profile.hpp"
#include "pvi/protocol/config.hpp"
#include "pvi/protocol/setup.hpp"

namespace pvi::protocol {

// Key-value scenario file, one "key = value" per line, '#' comments.
//
//   model    h | het | sub                    budget   rational
//   bids     comma list of rationals          limits   comma list (H-models)
//   ground   m, or a comma list for a sweep   n        user count or sweep
//   alpha, fine, pmax                         audit policy (defaults: pmax = B,
//                                             fine = 9 pmax, alpha at threshold)
//   tid, deadline, seed, code_bits            auction parameters
//   paillier_bits, group_bits, subgroup_bits  key sizes
//   trials, inclusion                         generator settings
//   profile  "id bid limit" or "id bid a1,a2,..." (repeatable)
struct Scenario {
  AuctionConfig config;
  SetupOptions setup;
  std::vector<mech::SensingProfile> profiles;
  std::vector<std::size_t> users;
  std::vector<std::size_t> grounds;
  std::size_t trials = 0;
  mpq_class inclusion{2, 5};
  std::string source;
};

// Throws ParseError (with the line number) or DomainError.
Scenario parse_scenario(std::string_view text);
// Throws UsageError when the file cannot be read.
Scenario load_scenario(const std::string& path);

}  // namespace pvi::protocol
