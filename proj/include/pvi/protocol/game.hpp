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

#include <cstddef>
#include <cstdint>

#include "pvi/protocol/config.hpp"

namespace pvi::protocol {

struct GameEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t trials = 0;
  std::size_t audited = 0;
};

// (1 - alpha) * gain - alpha * F.
mpq_class expected_cheating_utility(const VerificationPolicy& policy, const mpq_class& cheat_gain);

// Monte Carlo over the audit coin: the platform keeps cheat_gain when the
// cheated user does not audit and pays the fine when it does. Needs at least
// 10^4 trials.
GameEstimate cheating_game(const VerificationPolicy& policy, const mpq_class& cheat_gain,
                           std::size_t trials, std::uint64_t seed);

}  // namespace pvi::protocol
