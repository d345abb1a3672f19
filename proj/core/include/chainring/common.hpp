/*
 * Copyright 2026 The chainring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chainring {

using BigInt = boost::multiprecision::cpp_int;

/// An enumeration would produce more elements than the active cap allows.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested a structural fact that only holds for p odd (or p = 2, n <= 2),
/// or a quantity that does not fit in 64-bit arithmetic.
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The given polynomial does not divide x^(p^r - 1) - 1 mod p, i.e. it is not
/// primitive irreducible and has no Teichmüller lift.
class NotLiftable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultMaterializeCap = 1ull << 16;
inline constexpr std::uint64_t kDefaultOracleCap = 4096;

struct Caps {
  std::uint64_t materialize = kDefaultMaterializeCap;
  std::uint64_t oracle = kDefaultOracleCap;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Prime factorization q -> multiplicity, ascending by q. factorize(1) = {}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// base^exp, throwing UnsupportedRegime on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

/// base^exp <= bound, evaluated without overflow.
bool pow_at_most(std::uint64_t base, std::uint64_t exp, std::uint64_t bound);

BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// p-adic valuation of x in [0, p^n), with val(0) = n by convention.
unsigned int_p_valuation(std::uint64_t x, std::uint64_t p, unsigned n);

}  // namespace chainring
