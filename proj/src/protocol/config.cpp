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
#include "pvi/protocol/config.hpp"

#include "pvi/common/errors.hpp"

namespace pvi::protocol {

mpq_class VerificationPolicy::threshold(const mpq_class& fine, const mpq_class& p_max) {
  return p_max / (fine + p_max);
}

VerificationPolicy VerificationPolicy::at_threshold(const mpq_class& fine, const mpq_class& p_max) {
  return {threshold(fine, p_max), fine, p_max};
}

void VerificationPolicy::validate() const {
  if (fine <= 0) throw DomainError("fine must be positive");
  if (p_max < 0) throw DomainError("maximal payment must be nonnegative");
  if (alpha > 1) throw DomainError("audit probability above 1");
  if (alpha < threshold(fine, p_max)) throw DomainError("audit probability below p_max/(F+p_max)");
}

void AuctionConfig::validate() const {
  if (budget < 0) throw DomainError("budget must be nonnegative");
  if (deadline < 2) throw DomainError("deadline round must be at least 2");
  if (bid_domain.empty()) throw DomainError("bid domain is empty");
  for (std::size_t i = 0; i < bid_domain.size(); ++i) {
    if (bid_domain[i] <= 0) throw DomainError("bid domain values must be positive");
    if (i && !(bid_domain[i - 1] < bid_domain[i])) throw DomainError("bid domain not increasing");
  }
  if (model == mech::JobModel::kSubmodular) {
    if (ground_size == 0) throw DomainError("submodular auctions need a ground set");
  } else {
    if (limit_domain.empty()) throw DomainError("limit domain is empty");
    for (std::size_t i = 0; i < limit_domain.size(); ++i) {
      if (limit_domain[i] <= 0 || limit_domain[i].get_den() != 1)
        throw DomainError("limits must be positive integers");
      if (i && !(limit_domain[i - 1] < limit_domain[i]))
        throw DomainError("limit domain not increasing");
    }
  }
  if (code_bits < 8 || code_bits > 256) throw DomainError("code width must be in [8, 256]");
  verification.validate();
}

Bytes AuctionConfig::serialize() const {
  ByteWriter w;
  w.str(tid).mpq(budget).u64(static_cast<std::uint64_t>(deadline)).u8(static_cast<std::uint8_t>(model));
  w.u32(static_cast<std::uint32_t>(bid_domain.size()));
  for (const mpq_class& b : bid_domain) w.mpq(b);
  w.u32(static_cast<std::uint32_t>(limit_domain.size()));
  for (const mpq_class& l : limit_domain) w.mpq(l);
  w.u64(ground_size).mpq(verification.alpha).mpq(verification.fine).mpq(verification.p_max);
  w.u32(code_bits);
  return std::move(w).take();
}

AuctionConfig default_config(mech::JobModel model, const mpq_class& budget,
                             std::vector<mpq_class> bid_domain, std::vector<mpq_class> limit_domain,
                             std::size_t ground_size, std::uint64_t seed) {
  AuctionConfig c;
  c.model = model;
  c.budget = budget;
  c.bid_domain = std::move(bid_domain);
  c.limit_domain = std::move(limit_domain);
  c.ground_size = ground_size;
  c.seed = seed;
  mpq_class p_max = budget > 0 ? budget : mpq_class(1);
  c.verification = VerificationPolicy::at_threshold(9 * p_max, p_max);
  return c;
}

}  // namespace pvi::protocol
