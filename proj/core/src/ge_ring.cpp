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

#include "chainring/ge_ring.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace chainring {

GeParams GeParams::make(std::uint64_t p, unsigned n, unsigned r,
                        std::uint64_t e, std::uint64_t s) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (r < 1) throw InvalidParams("r must be positive");
  if (e < 1) throw InvalidParams("e must be positive");
  if (n < 2) throw InvalidParams("n must be at least 2");
  const unsigned __int128 floor = static_cast<unsigned __int128>(n - 1) * e;
  if (s <= floor) {
    if (s == floor && n >= 3) {
      // s = (n-1)e presents a ring of characteristic p^(n-1); renormalize.
      GeParams out = make(p, n - 1, r, e, s);
      out.normalized_from_n = n;
      return out;
    }
    throw InvalidParams("s must satisfy (n-1)e < s <= ne");
  }
  if (static_cast<unsigned __int128>(s) > floor + e) {
    throw InvalidParams("s must satisfy (n-1)e < s <= ne");
  }
  GeParams out;
  out.p = p;
  out.n = n;
  out.r = r;
  out.e = e;
  out.s = s;
  return out;
}

bool GeElement::is_zero() const {
  return std::all_of(slots_.begin(), slots_.end(),
                     [](const GrElement& a) { return a.is_zero(); });
}

bool GeElement::is_unit() const { return slots_[0].is_unit(); }

GeElement GeElement::operator+(const GeElement& rhs) const {
  return ring_->add(*this, rhs);
}
GeElement GeElement::operator-(const GeElement& rhs) const {
  return ring_->sub(*this, rhs);
}
GeElement GeElement::operator*(const GeElement& rhs) const {
  return ring_->mul(*this, rhs);
}
GeElement GeElement::operator-() const { return ring_->neg(*this); }

bool GeElement::operator==(const GeElement& rhs) const {
  return slots_ == rhs.slots_;
}

bool GeElement::operator<(const GeElement& rhs) const {
  return flat_coeffs() < rhs.flat_coeffs();
}

std::vector<std::uint64_t> GeElement::flat_coeffs() const {
  std::vector<std::uint64_t> out;
  out.reserve(slots_.size() * slots_[0].coeffs().size());
  for (const auto& s : slots_) {
    out.insert(out.end(), s.coeffs().begin(), s.coeffs().end());
  }
  return out;
}

GeRingPtr GeRing::make(const GeParams& params,
                       const std::vector<std::uint64_t>& u_coeffs) {
  auto base = GaloisRing::make(params.p, params.n, params.r);
  return make(base, params, base->from_coeffs(u_coeffs));
}

GeRingPtr GeRing::make(const GeParams& params, const GrElement& u) {
  return make(u.ring(), params, u);
}

GeRingPtr GeRing::make(GaloisRingPtr base, const GeParams& params,
                       const GrElement& u) {
  if (!base || base->p() != params.p || base->n() != params.n ||
      base->r() != params.r) {
    throw ContextMismatch("coefficient ring does not match the parameters");
  }
  if (!u.is_unit()) throw NotAUnit("defining element u must be a unit");

  auto ring = std::shared_ptr<GeRing>(new GeRing());
  ring->params_ = params;
  ring->base_ = base;
  ring->u_ = u;
  ring->pu_ = base->scalar_mul(u, params.p);

  // theta^(s-1) != 0, theta^s = 0, theta^e = p*u
  GeRingPtr out = ring;
  const GeElement th = out->theta();
  if (out->pow(th, params.e) != out->embed_base(*ring->pu_) ||
      !out->pow(th, params.s).is_zero() ||
      out->pow(th, params.s - 1).is_zero()) {
    throw std::logic_error("Eisenstein presentation sanity check failed");
  }
  return out;
}

bool GeRing::same_ring(const GeRing& other) const {
  return this == &other ||
         (params_ == other.params_ && base_->same_ring(*other.base_) &&
          *u_ == *other.u_);
}

void GeRing::check_element(const GeElement& a) const {
  if (!a.ring() || !same_ring(*a.ring())) {
    throw ContextMismatch("element belongs to a different GE ring");
  }
}

GrElement GeRing::reduce_slot(const GrElement& a, std::uint64_t i) const {
  const std::uint64_t m = slot_modulus(i);
  std::vector<std::uint64_t> c = a.coeffs();
  for (auto& v : c) v %= m;
  return base_->from_coeffs(std::move(c));
}

GeElement GeRing::zero() const {
  return GeElement(self(),
                   std::vector<GrElement>(params_.e, base_->zero()));
}

GeElement GeRing::one() const {
  std::vector<GrElement> s(params_.e, base_->zero());
  s[0] = base_->one();
  return GeElement(self(), std::move(s));
}

GeElement GeRing::theta() const { return monomial(1, base_->one()); }

GeElement GeRing::embed_base(const GrElement& a) const {
  std::vector<GrElement> s(params_.e, base_->zero());
  s[0] = reduce_slot(a, 0);
  return GeElement(self(), std::move(s));
}

GeElement GeRing::from_slots(std::vector<GrElement> slots) const {
  if (slots.size() != params_.e) {
    throw InvalidParams("slot vector must have length e");
  }
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    slots[i] = reduce_slot(slots[i], i);
  }
  return GeElement(self(), std::move(slots));
}

GeElement GeRing::monomial(std::uint64_t k, const GrElement& coef) const {
  const std::uint64_t q = k / params_.e;
  const std::uint64_t i = k % params_.e;
  std::vector<GrElement> s(params_.e, base_->zero());
  s[i] = reduce_slot(base_->mul(coef, base_->pow(*pu_, q)), i);
  return GeElement(self(), std::move(s));
}

GeElement GeRing::add(const GeElement& a, const GeElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<GrElement> s;
  s.reserve(params_.e);
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    s.push_back(reduce_slot(base_->add(a.slots()[i], b.slots()[i]), i));
  }
  return GeElement(self(), std::move(s));
}

GeElement GeRing::sub(const GeElement& a, const GeElement& b) const {
  return add(a, neg(b));
}

GeElement GeRing::neg(const GeElement& a) const {
  check_element(a);
  std::vector<GrElement> s;
  s.reserve(params_.e);
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    s.push_back(reduce_slot(base_->neg(a.slots()[i]), i));
  }
  return GeElement(self(), std::move(s));
}

GeElement GeRing::mul(const GeElement& a, const GeElement& b) const {
  check_element(a);
  check_element(b);
  const std::uint64_t e = params_.e;
  std::vector<GrElement> conv(2 * e - 1, base_->zero());
  for (std::uint64_t i = 0; i < e; ++i) {
    if (a.slots()[i].is_zero()) continue;
    for (std::uint64_t j = 0; j < e; ++j) {
      conv[i + j] = base_->add(conv[i + j],
                               base_->mul(a.slots()[i], b.slots()[j]));
    }
  }
  // theta^(e+k) -> p*u*theta^k; one pass since 2e-2 - e < e
  for (std::uint64_t k = 2 * e - 2; k >= e && k < 2 * e - 1; --k) {
    if (conv[k].is_zero()) continue;
    conv[k - e] = base_->add(conv[k - e], base_->mul(conv[k], *pu_));
  }
  conv.resize(e, base_->zero());
  std::vector<GrElement> s;
  s.reserve(e);
  for (std::uint64_t i = 0; i < e; ++i) {
    s.push_back(reduce_slot(conv[i], i));
  }
  return GeElement(self(), std::move(s));
}

GeElement GeRing::pow(const GeElement& a, std::uint64_t k) const {
  check_element(a);
  GeElement acc = one();
  GeElement base = a;
  while (k != 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool GeRing::is_unit(const GeElement& a) const {
  check_element(a);
  return a.is_unit();
}

std::optional<GeElement> GeRing::try_invert(const GeElement& a) const {
  check_element(a);
  if (!a.is_unit()) return std::nullopt;
  const GrElement a0_inv = *base_->try_invert(a.slots()[0]);
  const GeElement scaled = mul(a, embed_base(a0_inv));  // 1 + w, w in J
  const GeElement w = sub(scaled, one());
  GeElement series = one();
  GeElement term = one();
  for (std::uint64_t k = 1; k < params_.s; ++k) {
    term = neg(mul(term, w));
    if (term.is_zero()) break;
    series = add(series, term);
  }
  GeElement inv = mul(series, embed_base(a0_inv));
  assert(mul(a, inv) == one());
  return inv;
}

std::uint64_t GeRing::radical_valuation(const GeElement& a) const {
  check_element(a);
  std::uint64_t v = params_.s;
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    if (a.slots()[i].is_zero()) continue;
    const std::uint64_t term =
        i + params_.e * a.slots()[i].p_valuation();
    v = std::min(v, term);
  }
  return v;
}

std::pair<GrElement, GeElement> GeRing::unit_decompose(
    const GeElement& a) const {
  check_element(a);
  if (!a.is_unit()) throw NotAUnit("unit_decompose requires a unit");
  const GrElement gamma = base_->teichmuller_lift(a.slots()[0]);
  const GrElement gamma_inv = *base_->try_invert(gamma);
  return {gamma, mul(embed_base(gamma_inv), a)};
}

std::optional<GrElement> GeRing::project_base(const GeElement& a) const {
  check_element(a);
  for (std::uint64_t i = 1; i < params_.e; ++i) {
    if (!a.slots()[i].is_zero()) return std::nullopt;
  }
  return a.slots()[0];
}

std::vector<GrElement> GeRing::l_e_bruteforce(std::uint64_t cap) const {
  std::set<std::vector<std::uint64_t>> seen;
  for (const GeElement& z : all_units(cap)) {
    const GeElement ze = pow(z, params_.e);
    if (auto in_base = project_base(ze)) {
      seen.insert(in_base->coeffs());
    }
  }
  std::vector<GrElement> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(base_->from_coeffs(c));
  return out;
}

std::uint64_t GeRing::size_u64() const {
  return checked_pow(params_.p,
                     static_cast<std::uint64_t>(params_.r) * params_.s);
}

bool GeRing::size_at_most(std::uint64_t cap) const {
  return pow_at_most(params_.p,
                     static_cast<std::uint64_t>(params_.r) * params_.s, cap);
}

std::uint64_t GeRing::element_rank(const GeElement& a) const {
  check_element(a);
  std::uint64_t rank = 0;
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    const std::uint64_t m = slot_modulus(i);
    for (std::uint64_t c : a.slots()[i].coeffs()) {
      rank = rank * m + c;
    }
  }
  return rank;
}

GeElement GeRing::element_at(std::uint64_t rank) const {
  std::vector<GrElement> slots;
  slots.resize(params_.e, base_->zero());
  // digits with slot 0 most significant: peel from the least significant end
  std::vector<std::vector<std::uint64_t>> coeffs(params_.e);
  for (std::uint64_t i = params_.e; i-- > 0;) {
    const std::uint64_t m = slot_modulus(i);
    std::vector<std::uint64_t> c(params_.r);
    for (unsigned j = params_.r; j-- > 0;) {
      c[j] = rank % m;
      rank /= m;
    }
    coeffs[i] = std::move(c);
  }
  for (std::uint64_t i = 0; i < params_.e; ++i) {
    slots[i] = base_->from_coeffs(std::move(coeffs[i]));
  }
  return GeElement(self(), std::move(slots));
}

std::vector<GeElement> GeRing::all_elements(std::uint64_t cap) const {
  if (!size_at_most(cap)) throw CapExceeded("GE ring larger than cap");
  const std::uint64_t total = size_u64();
  std::vector<GeElement> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(element_at(k));
  return out;
}

std::vector<GeElement> GeRing::all_units(std::uint64_t cap) const {
  if (!size_at_most(cap)) throw CapExceeded("GE ring larger than cap");
  const std::uint64_t total = size_u64();
  std::vector<GeElement> out;
  for (std::uint64_t k = 0; k < total; ++k) {
    GeElement x = element_at(k);
    if (x.is_unit()) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace chainring
