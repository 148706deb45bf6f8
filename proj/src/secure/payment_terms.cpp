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
#include "pvi/secure/payment_terms.hpp"

#include "pvi/common/errors.hpp"
#include "pvi/crypto/bigint.hpp"

namespace pvi::secure {

mpz_class marginal_scale(const std::vector<mpq_class>& bid_domain, const mpq_class& budget) {
  mpz_class q = budget.get_num();
  for (const mpq_class& b : bid_domain) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), b.get_num_mpz_t());
  return q;
}

mpz_class payment_scale(const std::vector<mpq_class>& bid_domain, const mpq_class& budget,
                        std::size_t ground_size) {
  mpz_class q = budget.get_den();
  for (const mpq_class& b : bid_domain) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), b.get_den_mpz_t());
  mpz_class l = 1;
  for (std::size_t u = 2; u <= ground_size; ++u) {
    mpz_class uu(static_cast<unsigned long>(u));
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), uu.get_mpz_t());
  }
  // A product, not an lcm: den(b) * U' must divide Q_p for every pair.
  return q * l;
}

mpz_class exact_scaled(const mpq_class& value, const mpz_class& scale) {
  mpq_class v = value * scale;
  if (v.get_den() != 1) throw ArithmeticError("scaled value is not an integer");
  return v.get_num();
}

crypto::PaillierCiphertext divide_by(const crypto::PaillierPublicKey& pk,
                                     const crypto::PaillierCiphertext& u, const mpq_class& omega,
                                     const mpz_class& scale) {
  if (omega <= 0) throw ArithmeticError("division by a non-positive marginal per bid");
  mpq_class factor = mpq_class(scale) / omega;
  mpz_class exponent = factor.get_num() * crypto::invert(factor.get_den(), pk.n());
  return pk.scale(u, exponent);
}

PaymentTerms encrypted_payment_terms(const crypto::PaillierPublicKey& pk,
                                     const crypto::PaillierCiphertext& e_ui,
                                     const mpq_class& omega_ij, const mpq_class& omega_p,
                                     const mpz_class& scale) {
  PaymentTerms out{std::nullopt, divide_by(pk, e_ui, omega_p, scale)};
  if (omega_ij > 0) out.bid_term = divide_by(pk, e_ui, omega_ij, scale);
  return out;
}

}  // namespace pvi::secure
