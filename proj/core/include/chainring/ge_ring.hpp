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

#include "chainring/galois_ring.hpp"

namespace chainring {

/// Parameters (p, n, r, e, s) of a pure Galois-Eisenstein ring
/// GR(p^n, r)[x] / (x^e - p*u, x^s), with s = (n-1)e + t and 1 <= t <= e.
struct GeParams {
  std::uint64_t p = 0;
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t e = 0;
  std::uint64_t s = 0;
  /// Set when the input had t = 0 and was renormalized to characteristic
  /// p^(n-1); holds the original n.
  std::optional<unsigned> normalized_from_n;

  std::uint64_t t() const { return s - std::uint64_t(n - 1) * e; }
  bool divides_p_minus_1() const { return e % (p - 1) == 0; }
  /// (p-1) does not divide e: the regime in which the closed-form results
  /// about L_e and the class count are certified.
  bool hypothesis_ok() const { return !divides_p_minus_1(); }

  bool operator==(const GeParams& o) const {
    return p == o.p && n == o.n && r == o.r && e == o.e && s == o.s;
  }

  /// Validates and canonicalizes.  t = 0 inputs are renormalized to
  /// (n-1, t = e) since the presented ring has characteristic p^(n-1).
  static GeParams make(std::uint64_t p, unsigned n, unsigned r,
                       std::uint64_t e, std::uint64_t s);
};

class GeRing;
using GeRingPtr = std::shared_ptr<const GeRing>;

/// Element of GE(u): coefficient vector (a_0, ..., a_{e-1}) over GR(p^n, r)
/// for the powers 1, theta, ..., theta^{e-1}.  Canonical form reduces slot i
/// mod p^n for i < t and mod p^(n-1) for i >= t, which makes theta^s = 0
/// automatic and the representation unique (p^(rs) distinct vectors).
class GeElement {
 public:
  const std::vector<GrElement>& slots() const { return slots_; }
  const GeRingPtr& ring() const { return ring_; }

  bool is_zero() const;
  bool is_unit() const;  // slot 0 is a unit of GR

  GeElement operator+(const GeElement& rhs) const;
  GeElement operator-(const GeElement& rhs) const;
  GeElement operator*(const GeElement& rhs) const;
  GeElement operator-() const;

  bool operator==(const GeElement& rhs) const;
  bool operator<(const GeElement& rhs) const;  // lex on flattened coeffs

  std::vector<std::uint64_t> flat_coeffs() const;

 private:
  friend class GeRing;
  GeElement(GeRingPtr ring, std::vector<GrElement> slots)
      : ring_(std::move(ring)), slots_(std::move(slots)) {}

  GeRingPtr ring_;
  std::vector<GrElement> slots_;
};

class GeRing : public std::enable_shared_from_this<GeRing> {
 public:
  /// Builds the coefficient ring deterministically from the parameters.
  /// u must be a unit of GR(p^n, r); throws NotAUnit otherwise.
  static GeRingPtr make(const GeParams& params,
                        const std::vector<std::uint64_t>& u_coeffs);
  static GeRingPtr make(const GeParams& params, const GrElement& u);
  static GeRingPtr make(GaloisRingPtr base, const GeParams& params,
                        const GrElement& u);

  const GeParams& params() const { return params_; }
  const GaloisRingPtr& base() const { return base_; }
  const GrElement& defining_unit() const { return *u_; }

  /// Modulus of coefficient slot i: p^n below t, p^(n-1) from t on.
  std::uint64_t slot_modulus(std::uint64_t i) const {
    return i < params_.t() ? base_->modulus() : base_->modulus() / params_.p;
  }

  bool same_ring(const GeRing& other) const;

  GeElement zero() const;
  GeElement one() const;
  GeElement theta() const;
  GeElement embed_base(const GrElement& a) const;
  GeElement from_slots(std::vector<GrElement> slots) const;
  /// coef * theta^k in canonical form, for any k >= 0.
  GeElement monomial(std::uint64_t k, const GrElement& coef) const;

  GeElement add(const GeElement& a, const GeElement& b) const;
  GeElement sub(const GeElement& a, const GeElement& b) const;
  GeElement neg(const GeElement& a) const;
  GeElement mul(const GeElement& a, const GeElement& b) const;
  GeElement pow(const GeElement& a, std::uint64_t k) const;

  bool is_unit(const GeElement& a) const;
  /// Geometric-series inversion of the radical part; the series stops after
  /// at most s terms by nilpotency.
  std::optional<GeElement> try_invert(const GeElement& a) const;

  /// Largest v <= s with the element in (theta^v); s for zero.
  std::uint64_t radical_valuation(const GeElement& a) const;

  /// a = gamma * w with gamma a Teichmüller unit of the coefficient ring and
  /// w in 1 + J; unique.  Throws NotAUnit.
  std::pair<GrElement, GeElement> unit_decompose(const GeElement& a) const;

  /// The base-ring element when all higher slots vanish.
  std::optional<GrElement> project_base(const GeElement& a) const;

  /// (R^x)^e intersected with the embedded GR^x, by enumerating all units:
  /// sorted, duplicate-free, as base-ring elements.
  std::vector<GrElement> l_e_bruteforce(
      std::uint64_t cap = kDefaultMaterializeCap) const;

  std::uint64_t size_u64() const;  // p^(rs); UnsupportedRegime on overflow
  bool size_at_most(std::uint64_t cap) const;
  std::uint64_t element_rank(const GeElement& a) const;
  GeElement element_at(std::uint64_t rank) const;
  std::vector<GeElement> all_elements(
      std::uint64_t cap = kDefaultMaterializeCap) const;
  std::vector<GeElement> all_units(
      std::uint64_t cap = kDefaultMaterializeCap) const;

 private:
  GeRing() = default;
  GeRingPtr self() const { return shared_from_this(); }
  void check_element(const GeElement& a) const;
  GrElement reduce_slot(const GrElement& a, std::uint64_t i) const;

  GeParams params_;
  GaloisRingPtr base_;
  std::optional<GrElement> u_;
  std::optional<GrElement> pu_;  // p * u, the value of theta^e
};

}  // namespace chainring
