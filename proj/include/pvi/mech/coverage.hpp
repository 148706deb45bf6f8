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

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

#include "pvi/mech/profile.hpp"

namespace pvi::mech {

using CoverSet = boost::dynamic_bitset<>;

// U(S) = |union of Gamma_i over i in S|. Users are addressed by position.
class CoverageUtility {
 public:
  CoverageUtility() = default;
  CoverageUtility(std::size_t ground_size, std::vector<CoverSet> sets);
  // Throws DomainError for assignments outside [0, ground_size).
  static CoverageUtility from_profiles(std::size_t ground_size,
                                       const std::vector<SensingProfile>& profiles);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t users() const { return sets_.size(); }
  const CoverSet& set_of(std::size_t i) const { return sets_.at(i); }

  CoverSet empty_cover() const { return CoverSet(ground_size_); }
  CoverSet cover(const std::vector<std::size_t>& members) const;
  std::size_t value(const std::vector<std::size_t>& members) const { return cover(members).count(); }
  // |Gamma_i \ covered|
  std::size_t gain(const CoverSet& covered, std::size_t i) const;
  // U(S u {i}) - U(S); throws UsageError if i is in S.
  std::size_t marginal(const std::vector<std::size_t>& members, std::size_t i) const;

 private:
  std::size_t ground_size_ = 0;
  std::vector<CoverSet> sets_;
};

}  // namespace pvi::mech
