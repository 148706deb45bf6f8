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
#include "pvi/mech/coverage.hpp"

#include <algorithm>

#include "pvi/common/errors.hpp"

namespace pvi::mech {

CoverageUtility::CoverageUtility(std::size_t ground_size, std::vector<CoverSet> sets)
    : ground_size_(ground_size), sets_(std::move(sets)) {
  for (const CoverSet& s : sets_)
    if (s.size() != ground_size_) throw DomainError("coverage set has the wrong ground size");
}

CoverageUtility CoverageUtility::from_profiles(std::size_t ground_size,
                                               const std::vector<SensingProfile>& profiles) {
  std::vector<CoverSet> sets;
  sets.reserve(profiles.size());
  for (const SensingProfile& p : profiles) {
    CoverSet s(ground_size);
    for (std::uint32_t a : p.assignments) {
      if (a >= ground_size) throw DomainError("assignment outside the ground set");
      s.set(a);
    }
    sets.push_back(std::move(s));
  }
  return CoverageUtility(ground_size, std::move(sets));
}

CoverSet CoverageUtility::cover(const std::vector<std::size_t>& members) const {
  CoverSet out(ground_size_);
  for (std::size_t i : members) out |= sets_.at(i);
  return out;
}

std::size_t CoverageUtility::gain(const CoverSet& covered, std::size_t i) const {
  return (sets_.at(i) - covered).count();
}

std::size_t CoverageUtility::marginal(const std::vector<std::size_t>& members, std::size_t i) const {
  if (std::find(members.begin(), members.end(), i) != members.end())
    throw UsageError("marginal utility of a member of the set");
  return gain(cover(members), i);
}

}  // namespace pvi::mech
