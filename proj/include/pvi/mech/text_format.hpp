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

#include <string>
#include <string_view>
#include <vector>

#include "pvi/mech/profile.hpp"

namespace pvi::mech {

// Profiles, one per line: "user_id bid limit" for H-models and
// "user_id bid a1,a2,..." for the S-model. '#' starts a comment.
std::string format_profiles(const std::vector<SensingProfile>& profiles, JobModel model);
std::vector<SensingProfile> parse_profiles(std::string_view text, JobModel model);

// Outcome: optional "price num/den" line, then "user_id f num/den" per winner
// in admission order.
std::string format_outcome(const AuctionOutcome& outcome);
AuctionOutcome parse_outcome(std::string_view text);

}  // namespace pvi::mech
