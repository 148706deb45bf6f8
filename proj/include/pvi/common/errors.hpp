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

#include <stdexcept>
#include <string>

namespace pvi {

// Every failure raised by the library derives from Error so callers can
// separate protocol faults from std exceptions thrown by dependencies.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside the declared domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An operation was invoked in a way its contract forbids (mismatched keys,
// candidate already in the set, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Randomized generation gave up after its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// A time-locked value was requested before its release time.
class TimingError : public Error {
 public:
  using Error::Error;
};

// Ciphertext or commitment failed to authenticate or parse.
class DecryptionError : public Error {
 public:
  using Error::Error;
};

// Value cannot be represented (e.g. outside the Paillier plaintext space).
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Exact division requested where the divisor does not divide.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Lookup of a value that is not in a table.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Text input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Audit could not complete because board data is missing.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pvi
