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
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chainring/common.hpp"
#include "chainring/modpoly.hpp"

namespace chainring {

class GaloisRing;
using GaloisRingPtr = std::shared_ptr<const GaloisRing>;

/// Element of GR(p^n, r): coefficient vector (c_0, ..., c_{r-1}) over
/// Z/p^n in the basis 1, xi, ..., xi^{r-1}.  Always kept fully reduced, so
/// equality of elements is equality of coefficient vectors.  Value type;
/// all arithmetic is pure.
class GrElement {
 public:
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  const GaloisRingPtr& ring() const { return ring_; }

  bool is_zero() const;
  bool is_unit() const;
  /// Largest v with the element in p^v GR; n for zero.
  unsigned p_valuation() const;

  GrElement operator+(const GrElement& rhs) const;
  GrElement operator-(const GrElement& rhs) const;
  GrElement operator*(const GrElement& rhs) const;
  GrElement operator-() const;

  bool operator==(const GrElement& rhs) const {
    return coeffs_ == rhs.coeffs_;
  }
  /// Lexicographic on the coefficient vector; total order used for canonical
  /// representatives everywhere.
  bool operator<(const GrElement& rhs) const { return coeffs_ < rhs.coeffs_; }

 private:
  friend class GaloisRing;
  GrElement(GaloisRingPtr ring, std::vector<std::uint64_t> coeffs)
      : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

  GaloisRingPtr ring_;
  std::vector<std::uint64_t> coeffs_;
};

/// Base-p expansion with Teichmüller digits: value = sum digits[i] * p^i.
struct TeichDigits {
  std::vector<GrElement> digits;  // n entries, each in the Teichmüller set
};

class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
 public:
  /// Deterministic construction: lexicographically first primitive
  /// irreducible polynomial of degree r over GF(p), lifted to Z/p^n.
  static GaloisRingPtr make(std::uint64_t p, unsigned n, unsigned r);
  /// Same, from an explicit defining polynomial mod p (validated).
  static GaloisRingPtr make(std::uint64_t p, unsigned n, unsigned r,
                            const poly::Poly& f_mod_p);

  std::uint64_t p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned r() const { return r_; }
  std::uint64_t modulus() const { return mod_; }        // p^n
  std::uint64_t teich_order() const { return order_; }  // p^r - 1
  const poly::Poly& defining_poly() const { return f_n_; }
  poly::Poly defining_poly_mod_p() const;

  bool same_ring(const GaloisRing& other) const;

  GrElement zero() const;
  GrElement one() const;
  GrElement xi() const;
  GrElement from_int(std::uint64_t v) const;
  GrElement from_coeffs(std::vector<std::uint64_t> coeffs) const;

  GrElement add(const GrElement& a, const GrElement& b) const;
  GrElement sub(const GrElement& a, const GrElement& b) const;
  GrElement mul(const GrElement& a, const GrElement& b) const;
  GrElement neg(const GrElement& a) const;
  GrElement scalar_mul(const GrElement& a, std::uint64_t c) const;
  GrElement pow(const GrElement& a, std::uint64_t e) const;

  /// Inverse iff the element is a unit (nonzero residue mod p): residue-field
  /// inverse followed by Newton lifting through p^2, p^4, ...
  std::optional<GrElement> try_invert(const GrElement& a) const;

  /// The unique gamma with gamma ≡ a (mod p) and gamma^(p^r) = gamma.
  GrElement teichmuller_lift(const GrElement& a) const;

  /// {0, 1, xi, xi^2, ..., xi^(p^r - 2)} in that order; size p^r.
  std::vector<GrElement> teichmuller_set(
      std::uint64_t cap = kDefaultMaterializeCap) const;

  struct PowerSubgroup {
    GrElement generator;  // xi^e
    std::uint64_t order;  // (p^r - 1) / gcd(p^r - 1, e)
  };
  PowerSubgroup teichmuller_power_subgroup(std::uint64_t e) const;

  /// sigma_p^j acting digit-wise: expand, p^j-th power each Teichmüller
  /// digit, reassemble.
  GrElement frobenius(const GrElement& a, unsigned j) const;

  TeichDigits digit_expansion(const GrElement& a) const;
  GrElement from_digits(const TeichDigits& d) const;

  /// Unique (gamma, beta) with a = gamma + p^level * beta, gamma built from
  /// the low `level` digits and beta from the rest.
  std::pair<GrElement, GrElement> split_at(const GrElement& a,
                                           unsigned level) const;

  /// All sums of the low `level` Teichmüller digits: a complete residue
  /// system mod p^level with exactly p^(r*level) elements.
  std::vector<GrElement> residue_system(
      unsigned level, std::uint64_t cap = kDefaultMaterializeCap) const;

  /// a = teich_part * one_unit with teich_part in the Teichmüller set and
  /// one_unit in 1 + pGR; unique.  Throws NotAUnit.
  std::pair<GrElement, GrElement> unit_decompose(const GrElement& a) const;

  struct OneUnitPowerImage {
    unsigned level;  // the image is 1 + p^level GR
  };
  /// (1 + pGR)^(p^i) = 1 + p^(min(i+1, n)) GR for p odd or p = 2, n <= 2;
  /// throws UnsupportedRegime outside that range.
  OneUnitPowerImage one_unit_power_image(unsigned i) const;

  /// Discrete log base xi of a Teichmüller unit (baby-step/giant-step).
  std::uint64_t dlog_teich(const GrElement& a) const;

  std::uint64_t multiplicative_order(const GrElement& a) const;
  BigInt unit_group_order() const;  // p^(r(n-1)) * (p^r - 1)

  /// Rank of the coefficient vector in lexicographic order (c_0 most
  /// significant); requires p^(rn) to fit in 64 bits.
  std::uint64_t element_rank(const GrElement& a) const;
  GrElement element_at(std::uint64_t rank) const;
  std::uint64_t size_u64() const;  // p^(rn), UnsupportedRegime on overflow
  std::vector<GrElement> all_elements(
      std::uint64_t cap = kDefaultMaterializeCap) const;

  /// xi^(r+k) in the basis for k = 0..r-2; empty for r = 1.  Reduction rows
  /// for external hot-path multipliers.
  const std::vector<std::vector<std::uint64_t>>& xi_reduction() const {
    return xi_high_;
  }

 private:
  GaloisRing() = default;
  GaloisRingPtr self() const { return shared_from_this(); }
  void check_element(const GrElement& a) const;
  std::vector<std::uint64_t> raw_mul(const std::vector<std::uint64_t>& a,
                                     const std::vector<std::uint64_t>& b)
      const;
  GrElement pow_p_times(GrElement a, unsigned times) const;

  std::uint64_t p_ = 0;
  unsigned n_ = 0;
  unsigned r_ = 0;
  std::uint64_t mod_ = 0;    // p^n
  std::uint64_t order_ = 0;  // p^r - 1
  poly::Poly f_n_;
  std::vector<std::uint64_t> xi_coeffs_;
  // xi^(r+k) expressed in the basis, for k = 0..r-2 (reduction table)
  std::vector<std::vector<std::uint64_t>> xi_high_;
};

}  // namespace chainring
