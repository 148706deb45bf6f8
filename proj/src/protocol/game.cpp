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
#include "pvi/protocol/game.hpp"

#include <cmath>

#include "pvi/common/errors.hpp"
#include "pvi/common/rng.hpp"

namespace pvi::protocol {

constexpr std::size_t kMinGameTrials = 10000;

mpq_class expected_cheating_utility(const VerificationPolicy& policy, const mpq_class& cheat_gain) {
  return (1 - policy.alpha) * cheat_gain - policy.alpha * policy.fine;
}

GameEstimate cheating_game(const VerificationPolicy& policy, const mpq_class& cheat_gain,
                           std::size_t trials, std::uint64_t seed) {
  if (trials < kMinGameTrials) throw UsageError("the verification game needs at least 10^4 trials");
  if (policy.alpha < 0 || policy.alpha > 1) throw DomainError("audit probability outside [0, 1]");
  Rng rng(seed);
  GameEstimate out;
  out.trials = trials;
  for (std::size_t t = 0; t < trials; ++t)
    if (rng.bernoulli(policy.alpha)) ++out.audited;
  // Two-point outcome: the sample moments follow from the audit count.
  const double gain = cheat_gain.get_d();
  const double fine = policy.fine.get_d();
  const double k = static_cast<double>(out.audited);
  const double n = static_cast<double>(trials);
  out.mean = ((n - k) * gain - k * fine) / n;
  double sq = (n - k) * (gain - out.mean) * (gain - out.mean) + k * (fine + out.mean) * (fine + out.mean);
  out.std_error = std::sqrt(sq / (n - 1)) / std::sqrt(n);
  return out;
}

}  // namespace pvi::protocol
