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
#include <gtest/gtest.h>

#include "pvi/common/bytes.hpp"
#include "pvi/common/errors.hpp"
#include "pvi/common/rational.hpp"
#include "pvi/common/rng.hpp"

namespace pvi {
namespace {

TEST(Rational, ParsesFractionsDecimalsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational(" 0.25 "), mpq_class(1, 4));
  EXPECT_EQ(parse_rational("-7"), mpq_class(-7));
  EXPECT_EQ(parse_rational(".5"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("010/3"), mpq_class(10, 3));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, FormatsWithDenominator) {
  EXPECT_EQ(format_fraction(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(format_fraction(mpq_class(5)), "5/1");
  EXPECT_EQ(parse_rational(format_fraction(mpq_class(-22, 7))), mpq_class(-22, 7));
}

TEST(Bytes, WriterReaderRoundTrip) {
  ByteWriter w;
  w.u8(7).u32(0xdeadbeef).u64(1ULL << 40).str("task").mpz(mpz_class("123456789012345678901234567890"));
  w.mpz_fixed(mpz_class(258), 4).mpq(mpq_class(3, 8)).bytes(Bytes{1, 2, 3});
  Bytes data = std::move(w).take();
  ByteReader r(data);
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32(), 0xdeadbeefu);
  EXPECT_EQ(r.u64(), 1ULL << 40);
  EXPECT_EQ(r.str(), "task");
  EXPECT_EQ(r.mpz(), mpz_class("123456789012345678901234567890"));
  EXPECT_EQ(r.mpz_fixed(4), 258);
  EXPECT_EQ(r.mpq(), mpq_class(3, 8));
  EXPECT_EQ(r.bytes(), (Bytes{1, 2, 3}));
  EXPECT_TRUE(r.done());
  EXPECT_NO_THROW(r.expect_done());
}

TEST(Bytes, NegativeRationalIsRejected) {
  ByteWriter w;
  EXPECT_THROW(w.mpq(mpq_class(-1, 2)), EncodingError);
}

TEST(Bytes, TruncatedInputThrows) {
  Bytes data{0, 0, 0, 9, 1};
  ByteReader r(data);
  EXPECT_THROW(r.bytes(), ParseError);
}

TEST(Bytes, FixedWidthEncoding) {
  EXPECT_EQ(mpz_to_bytes(mpz_class(1), 4), (Bytes{0, 0, 0, 1}));
  EXPECT_EQ(mpz_from_bytes(Bytes{1, 0}), 256);
  EXPECT_EQ(to_hex(Bytes{0xab, 0x01}), "ab01");
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  mpz_class bound("1000000000000000000000");
  mpz_class x = a.below(bound);
  EXPECT_EQ(x, b.below(bound));
  EXPECT_NE(x, c.below(bound));
  Rng fa = a.fork(), fb = b.fork();
  EXPECT_EQ(fa.next_u64(), fb.next_u64());
}

TEST(Rng, BernoulliIsExactAtTheEnds) {
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    EXPECT_TRUE(rng.bernoulli(1));
    EXPECT_FALSE(rng.bernoulli(0));
  }
  std::size_t hits = 0;
  for (int i = 0; i < 20000; ++i) hits += rng.bernoulli(mpq_class(1, 4)) ? 1 : 0;
  // 3 sigma of a Binomial(20000, 1/4) is about 184.
  EXPECT_NEAR(static_cast<double>(hits), 5000.0, 184.0);
}

TEST(Rng, UnitModIsCoprime) {
  Rng rng(5);
  mpz_class n = 3 * 5 * 7 * 11;
  for (int i = 0; i < 200; ++i) {
    mpz_class r = rng.unit_mod(n), g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_LT(r, n);
  }
}

}  // namespace
}  // namespace pvi
