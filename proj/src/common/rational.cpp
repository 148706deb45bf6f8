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
#include "pvi/common/rational.hpp"

#include <cctype>

#include "pvi/common/errors.hpp"

namespace pvi {

std::string format_fraction(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  mpq_class out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad fraction: " + std::string(text));
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: " + std::string(text));
    out = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
      throw ParseError("bad decimal: " + std::string(text));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    out = mpq_class(num, scale);
  } else {
    if (!all_digits(text)) throw ParseError("bad number: " + std::string(text));
    out = mpq_class(mpz_class(std::string(text), 10));
  }
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

}  // namespace pvi
