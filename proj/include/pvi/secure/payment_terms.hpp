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

#include <optional>
#include <vector>

#include "pvi/crypto/paillier.hpp"

namespace pvi::secure {

// Q_omega: every U/b and U/B (U integer, b in the bid domain) times Q_omega
// is an integer.
mpz_class marginal_scale(const std::vector<mpq_class>& bid_domain, const mpq_class& budget);
// Q_p: every U * b / U' and U * B / U' (1 <= U' <= m) times Q_p is an integer.
mpz_class payment_scale(const std::vector<mpq_class>& bid_domain, const mpq_class& budget,
                        std::size_t ground_size);

// Q * value; throws ArithmeticError unless the product is integral.
mpz_class exact_scaled(const mpq_class& value, const mpz_class& scale);

// E(u)^{Q / omega} with the division taken modulo n: E(Q u / omega) whenever
// the quotient is integral. Throws ArithmeticError when the denominator is not
// invertible modulo n.
crypto::PaillierCiphertext divide_by(const crypto::PaillierPublicKey& pk,
                                     const crypto::PaillierCiphertext& u, const mpq_class& omega,
                                     const mpz_class& scale);

struct PaymentTerms {
  std::optional<crypto::PaillierCiphertext> bid_term;  // absent when omega_ij = 0
  crypto::PaillierCiphertext eta_term;
};

// b_(j) = U_i(T) / omega_ij with omega_ij = U_ij / b_ij, and
// eta = U_i(T) / omega_p with omega_p = U(T u {i}) / B.
PaymentTerms encrypted_payment_terms(const crypto::PaillierPublicKey& pk,
                                     const crypto::PaillierCiphertext& e_ui,
                                     const mpq_class& omega_ij, const mpq_class& omega_p,
                                     const mpz_class& scale);

}  // namespace pvi::secure
