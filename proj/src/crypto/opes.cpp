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
#include "pvi/crypto/opes.hpp"

#include <algorithm>
#include <set>

#include "pvi/common/errors.hpp"

namespace pvi::crypto {

OrderCodebook::OrderCodebook(std::vector<mpq_class> domain, unsigned code_bits, Rng& rng)
    : domain_(std::move(domain)), code_bits_(code_bits) {
  if (domain_.empty()) throw DomainError("encoding domain is empty");
  for (std::size_t i = 1; i < domain_.size(); ++i)
    if (!(domain_[i - 1] < domain_[i])) throw DomainError("encoding domain not strictly increasing");
  mpz_class space = mpz_class(1) << code_bits;
  if (code_bits == 0 || space < 4 * mpz_class(static_cast<unsigned long>(domain_.size())))
    throw DomainError("code width too small for the domain");
  std::set<mpz_class> picked;
  while (picked.size() < domain_.size()) picked.insert(rng.nonzero_below(space));
  codes_.assign(picked.begin(), picked.end());
  index();
}

void OrderCodebook::index() {
  by_value_.clear();
  by_code_.clear();
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    by_value_.emplace(domain_[i], i);
    by_code_.emplace(codes_[i], i);
  }
}

const mpz_class& OrderCodebook::encode(const mpq_class& value) const { return codes_[rank(value)]; }

std::size_t OrderCodebook::rank(const mpq_class& value) const {
  auto it = by_value_.find(value);
  if (it == by_value_.end()) throw DomainError("value outside the encoding domain");
  return it->second;
}

const mpq_class& OrderCodebook::decode(const mpz_class& code) const {
  auto it = by_code_.find(code);
  if (it == by_code_.end()) throw LookupError("not a code of this table");
  return domain_[it->second];
}

void OrderCodebook::serialize_into(ByteWriter& w) const {
  std::size_t width = (code_bits_ + 7) / 8;
  w.u32(code_bits_).u32(static_cast<std::uint32_t>(domain_.size()));
  for (std::size_t i = 0; i < domain_.size(); ++i) w.mpq(domain_[i]).mpz_fixed(codes_[i], width);
}

OrderCodebook OrderCodebook::deserialize_from(ByteReader& r) {
  OrderCodebook out;
  out.code_bits_ = r.u32();
  std::uint32_t count = r.u32();
  std::size_t width = (out.code_bits_ + 7) / 8;
  for (std::uint32_t i = 0; i < count; ++i) {
    out.domain_.push_back(r.mpq());
    out.codes_.push_back(r.mpz_fixed(width));
  }
  for (std::size_t i = 1; i < count; ++i)
    if (!(out.domain_[i - 1] < out.domain_[i]) || !(out.codes_[i - 1] < out.codes_[i]))
      throw ParseError("codebook is not strictly increasing");
  out.index();
  return out;
}

Bytes EncodingTable::serialize() const {
  ByteWriter w;
  bids.serialize_into(w);
  limits.serialize_into(w);
  return std::move(w).take();
}

EncodingTable EncodingTable::deserialize(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  EncodingTable out;
  out.bids = OrderCodebook::deserialize_from(r);
  out.limits = OrderCodebook::deserialize_from(r);
  r.expect_done();
  return out;
}

EncodingTable opes_build(const std::vector<mpq_class>& bid_domain,
                         const std::vector<mpq_class>& limit_domain, unsigned code_bits, Rng& rng) {
  return {OrderCodebook(bid_domain, code_bits, rng), OrderCodebook(limit_domain, code_bits, rng)};
}

EncodingTable opes_build(const std::vector<mpq_class>& bid_domain,
                         const std::vector<mpq_class>& limit_domain, unsigned code_bits,
                         std::uint64_t rng_seed) {
  Rng rng(rng_seed);
  return opes_build(bid_domain, limit_domain, code_bits, rng);
}

}  // namespace pvi::crypto
