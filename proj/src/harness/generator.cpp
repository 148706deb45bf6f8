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
#include "pvi/harness/generator.hpp"

#include "pvi/common/errors.hpp"

namespace pvi::harness {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng.below(mpz_class(static_cast<unsigned long>(n))).get_ui());
}

}  // namespace

std::vector<mech::SensingProfile> generate_profiles(const InstanceShape& shape, Rng& rng) {
  if (shape.bids.empty()) throw DomainError("empty bid domain");
  const bool sub = shape.model == mech::JobModel::kSubmodular;
  if (sub && shape.ground == 0) throw DomainError("submodular instances need a ground set");
  if (!sub && shape.limits.empty()) throw DomainError("empty limit domain");
  std::vector<mech::SensingProfile> out;
  for (std::size_t i = 0; i < shape.users; ++i) {
    mech::SensingProfile p;
    p.user_id = static_cast<mech::UserId>(i + 1);
    p.bid = shape.bids[pick(rng, shape.bids.size())];
    if (shape.model == mech::JobModel::kHeterogeneous)
      p.limit = static_cast<std::uint32_t>(shape.limits[pick(rng, shape.limits.size())].get_num().get_ui());
    if (sub) {
      while (p.assignments.empty())
        for (std::size_t k = 0; k < shape.ground; ++k)
          if (rng.bernoulli(shape.inclusion)) p.assignments.push_back(static_cast<std::uint32_t>(k));
    }
    out.push_back(std::move(p));
  }
  return out;
}

mpq_class generate_budget(const std::vector<mech::SensingProfile>& profiles, Rng& rng) {
  mpq_class ask = 0;
  for (const auto& p : profiles) ask += p.bid * p.limit;
  mpz_class top;
  mpz_cdiv_q(top.get_mpz_t(), ask.get_num_mpz_t(), ask.get_den_mpz_t());
  if (top < 1) top = 1;
  return mpq_class(1 + rng.below(top));
}

}  // namespace pvi::harness
