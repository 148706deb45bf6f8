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
#include <vector>

#include "pvi/common/rng.hpp"
#include "pvi/mech/profile.hpp"

namespace pvi::harness {

struct InstanceShape {
  mech::JobModel model = mech::JobModel::kHomogeneous;
  std::size_t users = 0;
  std::size_t ground = 0;  // S-model only
  std::vector<mpq_class> bids;
  std::vector<mpq_class> limits{1};
  mpq_class inclusion{2, 5};
};

// Ids 1..n; bids uniform over the bid domain, limits uniform over the limit
// domain (1 for homogeneous), assignment sets by independent inclusion with
// empty sets redrawn.
std::vector<mech::SensingProfile> generate_profiles(const InstanceShape& shape, Rng& rng);

// Uniform integer in [1, max(1, total ask)], where the total ask is the sum
// of bid * limit over the profiles.
mpq_class generate_budget(const std::vector<mech::SensingProfile>& profiles, Rng& rng);

}  // namespace pvi::harness
