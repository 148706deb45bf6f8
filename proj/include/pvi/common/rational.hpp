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

#include <string>
#include <string_view>

namespace pvi {

// Renders "num/den" (denominator always present) for CSV and fixtures.
std::string format_fraction(const mpq_class& q);

// Accepts "7", "3/4", or a plain decimal such as "2.5". Throws ParseError.
mpq_class parse_rational(std::string_view text);

// Least common multiple of the denominators of all values.
template <typename Range>
mpz_class lcm_of_denominators(const Range& values) {
  mpz_class acc = 1;
  for (const mpq_class& v : values) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), v.get_den_mpz_t());
  return acc;
}

}  // namespace pvi
