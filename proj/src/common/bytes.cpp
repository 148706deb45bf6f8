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
#include "pvi/common/bytes.hpp"

#include "pvi/common/errors.hpp"

namespace pvi {

std::string to_hex(std::span<const std::uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

Bytes mpz_to_bytes(const mpz_class& value, std::size_t min_width) {
  if (sgn(value) < 0) throw EncodingError("negative integer cannot be serialized");
  std::size_t count = (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  if (sgn(value) == 0) count = 0;
  Bytes out(std::max(count, min_width), 0);
  if (count > 0) {
    std::size_t written = 0;
    mpz_export(out.data() + (out.size() - count), &written, 1, 1, 1, 0,
               value.get_mpz_t());
  }
  return out;
}

mpz_class mpz_from_bytes(std::span<const std::uint8_t> data) {
  mpz_class v;
  if (!data.empty()) mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

ByteWriter& ByteWriter::u8(std::uint8_t v) {
  buf_.push_back(v);
  return *this;
}

ByteWriter& ByteWriter::u32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> shift));
  return *this;
}

ByteWriter& ByteWriter::u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) buf_.push_back(static_cast<std::uint8_t>(v >> shift));
  return *this;
}

ByteWriter& ByteWriter::bytes(std::span<const std::uint8_t> data) {
  u32(static_cast<std::uint32_t>(data.size()));
  buf_.insert(buf_.end(), data.begin(), data.end());
  return *this;
}

ByteWriter& ByteWriter::str(std::string_view s) {
  return bytes(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

ByteWriter& ByteWriter::mpz(const mpz_class& v) { return bytes(mpz_to_bytes(v)); }

ByteWriter& ByteWriter::mpz_fixed(const mpz_class& v, std::size_t width) {
  Bytes b = mpz_to_bytes(v, width);
  if (b.size() != width) throw EncodingError("integer exceeds fixed field width");
  buf_.insert(buf_.end(), b.begin(), b.end());
  return *this;
}

ByteWriter& ByteWriter::mpq(const mpq_class& v) {
  if (sgn(v) < 0) throw EncodingError("negative rational cannot be serialized");
  mpz(v.get_num());
  return mpz(v.get_den());
}

std::span<const std::uint8_t> ByteReader::take(std::size_t n) {
  if (data_.size() - pos_ < n) throw ParseError("truncated byte string");
  auto out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

std::uint8_t ByteReader::u8() { return take(1)[0]; }

std::uint32_t ByteReader::u32() {
  auto s = take(4);
  return (std::uint32_t{s[0]} << 24) | (std::uint32_t{s[1]} << 16) | (std::uint32_t{s[2]} << 8) |
         std::uint32_t{s[3]};
}

std::uint64_t ByteReader::u64() {
  auto s = take(8);
  std::uint64_t v = 0;
  for (auto b : s) v = (v << 8) | b;
  return v;
}

Bytes ByteReader::bytes() {
  auto len = u32();
  auto s = take(len);
  return Bytes(s.begin(), s.end());
}

std::string ByteReader::str() {
  auto b = bytes();
  return std::string(b.begin(), b.end());
}

mpz_class ByteReader::mpz() { return mpz_from_bytes(bytes()); }

mpz_class ByteReader::mpz_fixed(std::size_t width) { return mpz_from_bytes(take(width)); }

mpq_class ByteReader::mpq() {
  mpz_class num = mpz();
  mpz_class den = mpz();
  if (den == 0) throw ParseError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

void ByteReader::expect_done() const {
  if (!done()) throw ParseError("trailing bytes after record");
}

}  // namespace pvi
