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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pvi {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(std::span<const std::uint8_t> data);

// Big-endian magnitude of a non-negative integer, no leading zeros (empty for
// zero). With min_width the result is left-padded to that many bytes.
Bytes mpz_to_bytes(const mpz_class& value, std::size_t min_width = 0);
mpz_class mpz_from_bytes(std::span<const std::uint8_t> data);

// Canonical length-prefixed encoder. Every variable-length field is written
// as a 4-byte big-endian length followed by its bytes, so two encodings are
// equal iff the field sequences are equal.
class ByteWriter {
 public:
  ByteWriter& u8(std::uint8_t v);
  ByteWriter& u32(std::uint32_t v);
  ByteWriter& u64(std::uint64_t v);
  ByteWriter& bytes(std::span<const std::uint8_t> data);
  ByteWriter& str(std::string_view s);
  ByteWriter& mpz(const mpz_class& v);
  // Fixed-width field; throws EncodingError if the value does not fit.
  ByteWriter& mpz_fixed(const mpz_class& v, std::size_t width);
  ByteWriter& mpq(const mpq_class& v);

  const Bytes& data() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }
  std::size_t size() const { return buf_.size(); }

 private:
  Bytes buf_;
};

// Decoder for ByteWriter output. Truncated or trailing input raises ParseError.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  Bytes bytes();
  std::string str();
  mpz_class mpz();
  mpz_class mpz_fixed(std::size_t width);
  mpq_class mpq();

  bool done() const { return pos_ == data_.size(); }
  void expect_done() const;

 private:
  std::span<const std::uint8_t> take(std::size_t n);

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace pvi
