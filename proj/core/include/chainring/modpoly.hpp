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
#include <utility>
#include <vector>

#include "chainring/common.hpp"

namespace chainring::poly {

/// Dense polynomial over Z/m, constant term first, no trailing zero
/// coefficients (the zero polynomial is the empty vector).
using Poly = std::vector<std::uint64_t>;

Poly trimmed(Poly f);
int degree(const Poly& f);  // -1 for the zero polynomial
bool is_one(const Poly& f);

Poly mod_coeffs(const Poly& f, std::uint64_t m);
Poly add(const Poly& a, const Poly& b, std::uint64_t m);
Poly sub(const Poly& a, const Poly& b, std::uint64_t m);
Poly mul(const Poly& a, const Poly& b, std::uint64_t m);
Poly scalar_mul(const Poly& a, std::uint64_t c, std::uint64_t m);

/// Euclidean division by a monic divisor; exact over any Z/m.
std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b,
                                   std::uint64_t m);

Poly powmod(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t m);

/// Monic gcd over GF(p).
Poly gcd_fp(Poly a, Poly b, std::uint64_t p);

/// Bezout pair for coprime a, b over GF(p): s*a + t*b = 1,
/// deg s < deg b, deg t < deg a.
struct Bezout {
  Poly s, t;
};
Bezout ext_gcd_coprime_fp(const Poly& a, const Poly& b, std::uint64_t p);

bool is_irreducible(const Poly& f, std::uint64_t p);

/// Irreducible and the class of x has multiplicative order p^deg(f) - 1.
bool is_primitive_irreducible(const Poly& f, std::uint64_t p);

/// First primitive irreducible monic polynomial of degree r over GF(p),
/// searching in ascending order of the coefficient word
/// c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
Poly find_primitive_irreducible(std::uint64_t p, unsigned r);

/// The unique monic f_n over Z/p^n with f_n ≡ f (mod p) and
/// f_n | x^(p^r - 1) - 1.  Quadratic Hensel lifting of the cofactor pair in
/// x^(p^r - 1) - 1 = f * g with the Bezout certificate carried along; the
/// divisibility is asserted exactly at the end.  Cost grows with p^r; see
/// teichmuller_charpoly_lift for the large-field path.
Poly hensel_lift_factor(const Poly& f_mod_p, std::uint64_t p, unsigned n);

/// Same f_n computed as the characteristic polynomial of the Teichmüller
/// lift of a root of f in (Z/p^n)[y]/(f~) for a naive monic lift f~.
/// O(r^4) regardless of p^r; agrees with hensel_lift_factor by uniqueness.
Poly teichmuller_charpoly_lift(const Poly& f_mod_p, std::uint64_t p,
                               unsigned n);

}  // namespace chainring::poly
