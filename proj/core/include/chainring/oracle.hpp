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
#include <optional>
#include <vector>

#include "chainring/ge_ring.hpp"

// Brute-force verification engine: explicit element tables for small GE
// rings, exhaustive ring-isomorphism search, unit-group invariants.
//
// Completeness of the isomorphism search space: any ring isomorphism
// phi: R1 -> R2 between GE rings over the same coefficient ring maps
// Teichmüller elements to Teichmüller elements (the equation g^(p^r) = g is
// preserved), so it restricts to a power of Frobenius on the shared
// coefficient ring, and it maps theta to an element of radical valuation 1.
// Every element has a unique theta-adic Teichmüller digit expansion, so phi
// is determined by the pair (Frobenius twist, image of theta).  The search
// enumerates exactly these pairs and verifies both operation tables.
namespace chainring::oracle {

struct ExplicitRing {
  GeRingPtr ring;
  std::uint32_t size = 0;

  // index-valued operation tables, row-major [i * size + j]
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;

  std::vector<std::uint8_t> valuation;      // radical valuation per index
  std::vector<std::uint32_t> unit_indices;  // ascending

  // Teichmüller machinery for the shared coefficient ring
  std::vector<GrElement> teich;              // 0, 1, xi, ..., size p^r
  std::vector<std::uint32_t> teich_embed;    // ring index of each teich elem
  // theta-adic digit expansion per element: s digits, as teich indices
  std::vector<std::uint16_t> teich_digits;

  std::uint32_t zero_index = 0;
  std::uint32_t one_index = 0;
  std::uint32_t theta_index = 0;

  std::uint32_t add(std::uint32_t i, std::uint32_t j) const {
    return add_table[static_cast<std::size_t>(i) * size + j];
  }
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const {
    return mul_table[static_cast<std::size_t>(i) * size + j];
  }
  std::uint32_t pow(std::uint32_t i, std::uint64_t k) const;

  std::uint32_t index_of(const GeElement& x) const;
  GeElement element(std::uint32_t i) const;
};

/// Enumerates all p^(rs) canonical elements and builds both operation
/// tables.  Throws CapExceeded beyond the cap (and beyond 65535 elements,
/// the table index width).
ExplicitRing materialize(const GeRingPtr& ring,
                         std::uint64_t cap = kDefaultOracleCap);

struct IsomorphismWitness {
  unsigned base_twist = 0;          // Frobenius exponent on the coefficients
  std::uint32_t theta_image = 0;    // index in R2 of the image of theta
  std::vector<std::uint16_t> full_map;  // element permutation R1 -> R2
};

/// Exhaustive search over (Frobenius twist, valuation-1 image of theta),
/// candidates in lexicographic element order, twists ascending within;
/// returns the first witness whose induced map preserves both tables.
std::optional<IsomorphismWitness> oracle_isomorphic(const ExplicitRing& r1,
                                                    const ExplicitRing& r2);

/// Independent replay: bijectivity, both tables, and valuation preservation.
bool verify_witness(const ExplicitRing& r1, const ExplicitRing& r2,
                    const IsomorphismWitness& w);

struct UnitClass {
  GrElement representative;        // lexicographically least defining unit
  std::vector<GrElement> members;  // all defining units of the class, sorted
};

/// Partition of all defining units of GR(p^n, r) by ring isomorphism of
/// GE(u), decided entirely by the brute-force search.  Defining units that
/// agree mod p^(n-1) present literally the same quotient and share one
/// materialization.
std::vector<UnitClass> oracle_class_partition(const GeParams& params,
                                              const Caps& caps = {});

/// Invariant factors d_1 | d_2 | ... of a finite abelian group given as an
/// explicit element list closed under the ring multiplication.  Derived from
/// the counts of q^k-torsion solutions per prime q.
std::vector<std::uint64_t> abelian_invariants(
    const std::vector<GrElement>& elements);

struct TheoremCheck {
  enum class Status { kEqual, kMismatch } status = Status::kEqual;
  unsigned flat = 0;
  // set differences, as coefficient vectors
  std::vector<std::vector<std::uint64_t>> only_bruteforce;
  std::vector<std::vector<std::uint64_t>> only_level_formula;
};

/// Compares the enumerated e-th power subgroup of GE(u) against the
/// closed-form level description <xi^e> * (1 + p^flat GR).
TheoremCheck verify_theorem_2_4(const GeParams& params, const GrElement& u,
                                const Caps& caps = {});

}  // namespace chainring::oracle
