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

#include <doctest.h>

#include <random>

#include "chainring/modpoly.hpp"

using namespace chainring;
using namespace chainring::poly;

TEST_CASE("primitive irreducible search is deterministic") {
  CHECK(find_primitive_irreducible(3, 2) == Poly{2, 1, 1});  // x^2 + x + 2
  CHECK(find_primitive_irreducible(3, 1) == Poly{1, 1});     // x + 1
  CHECK(find_primitive_irreducible(2, 3) == Poly{1, 1, 0, 1});
  CHECK(find_primitive_irreducible(2, 1) == Poly{1, 1});
  CHECK(find_primitive_irreducible(5, 1) == Poly{2, 1});  // root 3, order 4
  CHECK_THROWS_AS(find_primitive_irreducible(4, 2), InvalidParams);
}

TEST_CASE("primitivity validator") {
  CHECK(is_primitive_irreducible({2, 1, 1}, 3));
  // x^2 + 1 over GF(3): irreducible, but the root has order 4, not 8
  CHECK(is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(is_primitive_irreducible({1, 0, 1}, 3));
  // reducible
  CHECK_FALSE(is_irreducible({2, 0, 1}, 3));
  CHECK_FALSE(is_primitive_irreducible({0, 1, 1}, 3));  // x(x+1)
}

TEST_CASE("Hensel lift of the defining polynomial") {
  // x^2 + x + 2 over GF(3) lifts to x^2 + 4x + 8 over Z/9
  CHECK(hensel_lift_factor({2, 1, 1}, 3, 2) == Poly{8, 4, 1});
  // identity at n = 1
  CHECK(hensel_lift_factor({2, 1, 1}, 3, 1) == Poly{2, 1, 1});
  // x + 1 over GF(3): the Teichmüller root of -1 is 8, so x - 8 = x + 1 mod 9
  CHECK(hensel_lift_factor({1, 1}, 3, 2) == Poly{1, 1});
  // non-divisor of x^(p^r-1) - 1 is rejected
  CHECK_THROWS_AS(hensel_lift_factor({0, 1, 1}, 3, 2), NotLiftable);
}

TEST_CASE("lift works for non-primitive irreducible divisors too") {
  // x^2 + 1 over GF(3) divides x^8 - 1; its lift must divide x^8 - 1 mod 9
  const Poly f2 = hensel_lift_factor({1, 0, 1}, 3, 2);
  CHECK(mod_coeffs(f2, 3) == Poly{1, 0, 1});
  Poly circle(9, 0);
  circle[0] = 8;
  circle[8] = 1;
  const auto [q, rem] = divmod_monic(circle, f2, 9);
  CHECK(rem.empty());
}

TEST_CASE("characteristic-polynomial lift agrees with the Hensel lift") {
  const struct {
    std::uint64_t p;
    unsigned r, n;
  } cases[] = {{3, 2, 2}, {3, 2, 3}, {2, 3, 2}, {2, 3, 4},
               {5, 2, 2}, {3, 1, 3}, {2, 4, 3}, {7, 1, 2}};
  for (const auto& c : cases) {
    const Poly f = find_primitive_irreducible(c.p, c.r);
    CHECK(hensel_lift_factor(f, c.p, c.n) ==
          teichmuller_charpoly_lift(f, c.p, c.n));
  }
}

TEST_CASE("division by a monic polynomial") {
  std::mt19937_64 rng(7);
  const std::uint64_t m = 27;
  for (int it = 0; it < 50; ++it) {
    Poly a(1 + rng() % 8), b(2 + rng() % 4);
    for (auto& c : a) c = rng() % m;
    for (auto& c : b) c = rng() % m;
    b.back() = 1;  // monic
    a = trimmed(std::move(a));
    const auto [q, rem] = divmod_monic(a, b, m);
    CHECK(degree(rem) < degree(b));
    CHECK(add(mul(q, b, m), rem, m) == a);
  }
}

TEST_CASE("extended gcd certificate over GF(p)") {
  const Poly a = {1, 2, 0, 1};  // x^3 + 2x + 1 over GF(5)
  const Poly b = {3, 1};        // x + 3
  const auto [s, t] = ext_gcd_coprime_fp(a, b, 5);
  CHECK(add(mul(s, a, 5), mul(t, b, 5), 5) == Poly{1});
}
