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
#include <map>
#include <vector>

#include "pvi/common/bytes.hpp"
#include "pvi/common/rng.hpp"

namespace pvi::crypto {

// Order-preserving codebook over a finite, strictly increasing domain. Codes
// are a uniformly random sorted subset of [1, 2^code_bits).
class OrderCodebook {
 public:
  OrderCodebook() = default;
  OrderCodebook(std::vector<mpq_class> domain, unsigned code_bits, Rng& rng);

  std::size_t size() const { return domain_.size(); }
  unsigned code_bits() const { return code_bits_; }
  const std::vector<mpq_class>& domain() const { return domain_; }
  const std::vector<mpz_class>& codes() const { return codes_; }

  // Throws DomainError for values outside the domain.
  const mpz_class& encode(const mpq_class& value) const;
  // 0-based rank of value in the domain.
  std::size_t rank(const mpq_class& value) const;
  // Throws LookupError for non-codes.
  const mpq_class& decode(const mpz_class& code) const;
  bool is_code(const mpz_class& code) const { return by_code_.contains(code); }

  void serialize_into(ByteWriter& w) const;
  static OrderCodebook deserialize_from(ByteReader& r);

 private:
  void index();

  std::vector<mpq_class> domain_;
  std::vector<mpz_class> codes_;
  unsigned code_bits_ = 0;
  std::map<mpq_class, std::size_t> by_value_;
  std::map<mpz_class, std::size_t> by_code_;
};

// Bid codes gamma and limit codes tau.
struct EncodingTable {
  OrderCodebook bids;
  OrderCodebook limits;

  Bytes serialize() const;
  static EncodingTable deserialize(std::span<const std::uint8_t> data);
};

EncodingTable opes_build(const std::vector<mpq_class>& bid_domain,
                         const std::vector<mpq_class>& limit_domain, unsigned code_bits,
                         std::uint64_t rng_seed);
EncodingTable opes_build(const std::vector<mpq_class>& bid_domain,
                         const std::vector<mpq_class>& limit_domain, unsigned code_bits, Rng& rng);

}  // namespace pvi::crypto
