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

#include <functional>
#include <string>
#include <vector>

#include "chainring/classifier.hpp"

namespace chainring::selftest {

enum class Status { kPass, kFail, kFinding, kSkipped };

struct CheckResult {
  std::string name;
  Status status = Status::kPass;
  std::string detail;
};

using Sink = std::function<void(const CheckResult&)>;

/// All valid parameter tuples with p in `primes` and p^(rs) <= size_cap,
/// ascending by (p, r, n, e, s).
std::vector<GeParams> sweep_tuples(const std::vector<std::uint64_t>& primes,
                                   std::uint64_t size_cap);

/// Fixed-value regressions: the 27-element non-isomorphic pair, both
/// classification counts, and the GR(9, 2) construction facts.
bool check_regressions(const Sink& sink);

/// Enumerated e-th power subgroup vs. the closed-form level description, for
/// every sweep tuple and every transversal member.  Tuples outside the
/// certified regime report findings instead of failures.
bool check_theorem_sweep(const Sink& sink, const Caps& caps = {});

/// Closed-form count == Frobenius orbit count == brute-force partition size
/// on every certified-regime sweep tuple.
bool check_double_count_sweep(const Sink& sink, const Caps& caps = {});

/// Fixed points of sigma^i on the transversal match
/// gcd(p^gcd(r,i) - 1, e) * p^((partial-1) gcd(r,i)) for every sweep tuple.
bool check_burnside_sweep(const Sink& sink, const Caps& caps = {});

/// Exhaustive coefficient-ring structure suite for p^(rn) <= size_cap:
/// digit-expansion bijectivity, split uniqueness, multiplicativity of the
/// Teichmüller section, Frobenius automorphism and fixed-point counts,
/// one-unit power images, one-unit group size and invariants.
bool check_structure_sweep(const Sink& sink, const Caps& caps = {});

/// Seeded random cross-checks of GE arithmetic against a naive
/// reduce-after-multiply oracle.
bool check_arithmetic_spot(const Sink& sink, std::uint64_t seed,
                           const Caps& caps = {});

bool run_quick(const Sink& sink);
bool run_full(const Sink& sink, const Caps& caps = {},
              std::uint64_t seed = 1);

}  // namespace chainring::selftest
