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

#include "chainring/galois_ring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>

namespace chainring {

namespace {

// Degrees up to this bound use the cofactor-pair Hensel lift; larger fields
// switch to the characteristic-polynomial construction, which does not touch
// polynomials of degree p^r - 1.
constexpr std::uint64_t kHenselOrderCap = 4096;

}  // namespace

bool GrElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](std::uint64_t c) { return c == 0; });
}

bool GrElement::is_unit() const {
  const std::uint64_t p = ring_->p();
  return std::any_of(coeffs_.begin(), coeffs_.end(),
                     [p](std::uint64_t c) { return c % p != 0; });
}

unsigned GrElement::p_valuation() const {
  unsigned v = ring_->n();
  for (std::uint64_t c : coeffs_) {
    v = std::min(v, int_p_valuation(c, ring_->p(), ring_->n()));
  }
  return v;
}

GrElement GrElement::operator+(const GrElement& rhs) const {
  return ring_->add(*this, rhs);
}
GrElement GrElement::operator-(const GrElement& rhs) const {
  return ring_->sub(*this, rhs);
}
GrElement GrElement::operator*(const GrElement& rhs) const {
  return ring_->mul(*this, rhs);
}
GrElement GrElement::operator-() const { return ring_->neg(*this); }

GaloisRingPtr GaloisRing::make(std::uint64_t p, unsigned n, unsigned r) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (n < 1 || r < 1) throw InvalidParams("n and r must be positive");
  return make(p, n, r, poly::find_primitive_irreducible(p, r));
}

GaloisRingPtr GaloisRing::make(std::uint64_t p, unsigned n, unsigned r,
                               const poly::Poly& f_mod_p) {
  if (!is_prime(p)) throw InvalidParams("p must be prime");
  if (n < 1 || r < 1) throw InvalidParams("n and r must be positive");
  const std::uint64_t mod = checked_pow(p, n);
  const std::uint64_t order = checked_pow(p, r) - 1;
  poly::Poly f = poly::trimmed(poly::mod_coeffs(f_mod_p, p));
  if (poly::degree(f) != static_cast<int>(r)) {
    throw InvalidParams("defining polynomial must have degree r");
  }
  if (!poly::is_primitive_irreducible(f, p)) {
    throw InvalidParams("defining polynomial must be primitive irreducible");
  }

  poly::Poly f_n = (n == 1) ? f
                 : (order <= kHenselOrderCap)
                     ? poly::hensel_lift_factor(f, p, n)
                     : poly::teichmuller_charpoly_lift(f, p, n);

  // x^(p^r - 1) ≡ 1 mod (f_n, p^n): exact divisibility certificate.
  if (poly::powmod({0, 1}, order, f_n, mod) != poly::Poly{1}) {
    throw std::logic_error("lifted polynomial does not split the unit circle");
  }

  auto ring = std::shared_ptr<GaloisRing>(new GaloisRing());
  ring->p_ = p;
  ring->n_ = n;
  ring->r_ = r;
  ring->mod_ = mod;
  ring->order_ = order;
  ring->f_n_ = f_n;

  if (r == 1) {
    ring->xi_coeffs_ = {(mod - f_n[0] % mod) % mod};
  } else {
    ring->xi_coeffs_.assign(r, 0);
    ring->xi_coeffs_[1] = 1;
    // xi^r = -(f_0 + f_1 xi + ... + f_{r-1} xi^{r-1})
    std::vector<std::uint64_t> high(r);
    for (unsigned i = 0; i < r; ++i) high[i] = (mod - f_n[i] % mod) % mod;
    ring->xi_high_.push_back(high);
    for (unsigned k = 1; k + 1 < r; ++k) {
      const auto& prev = ring->xi_high_.back();
      std::vector<std::uint64_t> next(r, 0);
      for (unsigned i = 0; i + 1 < r; ++i) next[i + 1] = prev[i];
      const std::uint64_t top = prev[r - 1];
      if (top != 0) {
        for (unsigned i = 0; i < r; ++i) {
          next[i] = (next[i] + mulmod(top, ring->xi_high_[0][i], mod)) % mod;
        }
      }
      ring->xi_high_.push_back(std::move(next));
    }
  }
  return ring;
}

poly::Poly GaloisRing::defining_poly_mod_p() const {
  return poly::mod_coeffs(f_n_, p_);
}

bool GaloisRing::same_ring(const GaloisRing& other) const {
  return this == &other ||
         (p_ == other.p_ && n_ == other.n_ && r_ == other.r_ &&
          f_n_ == other.f_n_);
}

void GaloisRing::check_element(const GrElement& a) const {
  if (!a.ring() || !same_ring(*a.ring())) {
    throw ContextMismatch("element belongs to a different Galois ring");
  }
}

GrElement GaloisRing::zero() const {
  return GrElement(self(), std::vector<std::uint64_t>(r_, 0));
}

GrElement GaloisRing::one() const {
  std::vector<std::uint64_t> c(r_, 0);
  c[0] = 1 % mod_;
  return GrElement(self(), std::move(c));
}

GrElement GaloisRing::xi() const { return GrElement(self(), xi_coeffs_); }

GrElement GaloisRing::from_int(std::uint64_t v) const {
  std::vector<std::uint64_t> c(r_, 0);
  c[0] = v % mod_;
  return GrElement(self(), std::move(c));
}

GrElement GaloisRing::from_coeffs(std::vector<std::uint64_t> coeffs) const {
  if (coeffs.size() != r_) {
    throw InvalidParams("coefficient vector must have length r");
  }
  for (auto& c : coeffs) c %= mod_;
  return GrElement(self(), std::move(coeffs));
}

GrElement GaloisRing::add(const GrElement& a, const GrElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::uint64_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = (a.coeffs()[i] + b.coeffs()[i]) % mod_;
  }
  return GrElement(self(), std::move(c));
}

GrElement GaloisRing::sub(const GrElement& a, const GrElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<std::uint64_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = (a.coeffs()[i] + mod_ - b.coeffs()[i]) % mod_;
  }
  return GrElement(self(), std::move(c));
}

GrElement GaloisRing::neg(const GrElement& a) const {
  check_element(a);
  std::vector<std::uint64_t> c(r_);
  for (unsigned i = 0; i < r_; ++i) {
    c[i] = (mod_ - a.coeffs()[i]) % mod_;
  }
  return GrElement(self(), std::move(c));
}

std::vector<std::uint64_t> GaloisRing::raw_mul(
    const std::vector<std::uint64_t>& a,
    const std::vector<std::uint64_t>& b) const {
  if (r_ == 1) return {mulmod(a[0], b[0], mod_)};
  std::vector<std::uint64_t> conv(2 * r_ - 1, 0);
  for (unsigned i = 0; i < r_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < r_; ++j) {
      conv[i + j] = (conv[i + j] + mulmod(a[i], b[j], mod_)) % mod_;
    }
  }
  for (unsigned k = r_; k <= 2 * r_ - 2; ++k) {
    const std::uint64_t c = conv[k];
    if (c == 0) continue;
    const auto& rep = xi_high_[k - r_];
    for (unsigned i = 0; i < r_; ++i) {
      conv[i] = (conv[i] + mulmod(c, rep[i], mod_)) % mod_;
    }
  }
  conv.resize(r_);
  return conv;
}

GrElement GaloisRing::mul(const GrElement& a, const GrElement& b) const {
  check_element(a);
  check_element(b);
  return GrElement(self(), raw_mul(a.coeffs(), b.coeffs()));
}

GrElement GaloisRing::scalar_mul(const GrElement& a, std::uint64_t c) const {
  check_element(a);
  c %= mod_;
  std::vector<std::uint64_t> out(r_);
  for (unsigned i = 0; i < r_; ++i) out[i] = mulmod(a.coeffs()[i], c, mod_);
  return GrElement(self(), std::move(out));
}

GrElement GaloisRing::pow(const GrElement& a, std::uint64_t e) const {
  check_element(a);
  GrElement acc = one();
  GrElement base = a;
  while (e != 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

GrElement GaloisRing::pow_p_times(GrElement a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = pow(a, p_);
  return a;
}

std::optional<GrElement> GaloisRing::try_invert(const GrElement& a) const {
  check_element(a);
  if (!a.is_unit()) return std::nullopt;
  // Inverse of the residue in GF(p^r) by Fermat, then Newton lifting; the
  // iteration doubles the precision of 1 - a*b each round.
  GrElement b = pow(a, order_ - 1);
  if (n_ > 1) {
    GrElement residue_inv = b;
    std::vector<std::uint64_t> c = residue_inv.coeffs();
    for (auto& v : c) v %= p_;
    b = GrElement(self(), std::move(c));
    const GrElement two = from_int(2);
    for (unsigned prec = 1; prec < n_; prec *= 2) {
      b = mul(b, sub(two, mul(a, b)));
    }
  }
  assert(mul(a, b) == one());
  return b;
}

GrElement GaloisRing::teichmuller_lift(const GrElement& a) const {
  check_element(a);
  GrElement z = a;
  for (unsigned it = 0; it < n_; ++it) {
    GrElement next = pow_p_times(z, r_);
    if (next == z) return z;
    z = next;
  }
  if (pow_p_times(z, r_) != z) {
    throw std::logic_error("Teichmüller iteration did not converge");
  }
  return z;
}

std::vector<GrElement> GaloisRing::teichmuller_set(std::uint64_t cap) const {
  if (!pow_at_most(p_, r_, cap)) {
    throw CapExceeded("Teichmüller set larger than cap");
  }
  std::vector<GrElement> out;
  out.reserve(order_ + 1);
  out.push_back(zero());
  GrElement g = one();
  for (std::uint64_t k = 0; k < order_; ++k) {
    out.push_back(g);
    g = mul(g, xi());
  }
  return out;
}

GaloisRing::PowerSubgroup GaloisRing::teichmuller_power_subgroup(
    std::uint64_t e) const {
  const std::uint64_t em = e % order_;
  return {pow(xi(), em), order_ / std::gcd(order_, em == 0 ? order_ : em)};
}

GrElement GaloisRing::frobenius(const GrElement& a, unsigned j) const {
  check_element(a);
  j %= r_;
  if (j == 0) return a;
  TeichDigits d = digit_expansion(a);
  for (auto& digit : d.digits) digit = pow_p_times(digit, j);
  return from_digits(d);
}

TeichDigits GaloisRing::digit_expansion(const GrElement& a) const {
  check_element(a);
  TeichDigits out;
  out.digits.reserve(n_);
  std::vector<std::uint64_t> rest = a.coeffs();
  for (unsigned i = 0; i < n_; ++i) {
    GrElement digit = teichmuller_lift(GrElement(self(), rest));
    out.digits.push_back(digit);
    for (unsigned k = 0; k < r_; ++k) {
      const std::uint64_t diff =
          (rest[k] + mod_ - digit.coeffs()[k]) % mod_;
      assert(diff % p_ == 0);
      rest[k] = diff / p_;
    }
  }
  return out;
}

GrElement GaloisRing::from_digits(const TeichDigits& d) const {
  GrElement acc = zero();
  std::uint64_t p_pow = 1;
  for (const auto& digit : d.digits) {
    acc = add(acc, scalar_mul(digit, p_pow));
    p_pow = (p_pow * p_) % mod_;
  }
  return acc;
}

std::pair<GrElement, GrElement> GaloisRing::split_at(const GrElement& a,
                                                     unsigned level) const {
  if (level > n_) throw InvalidParams("split level exceeds n");
  TeichDigits d = digit_expansion(a);
  GrElement low = zero();
  GrElement high = zero();
  std::uint64_t p_pow = 1;
  for (unsigned i = 0; i < level; ++i) {
    low = add(low, scalar_mul(d.digits[i], p_pow));
    p_pow = (p_pow * p_) % mod_;
  }
  p_pow = 1;
  for (unsigned i = level; i < n_; ++i) {
    high = add(high, scalar_mul(d.digits[i], p_pow));
    p_pow = (p_pow * p_) % mod_;
  }
  return {low, high};
}

std::vector<GrElement> GaloisRing::residue_system(unsigned level,
                                                  std::uint64_t cap) const {
  if (level > n_) throw InvalidParams("residue level exceeds n");
  if (level == 0) return {zero()};
  if (!pow_at_most(p_, static_cast<std::uint64_t>(r_) * level, cap)) {
    throw CapExceeded("residue system larger than cap");
  }
  const std::vector<GrElement> teich = teichmuller_set(cap);
  std::vector<GrElement> out;
  out.reserve(static_cast<std::size_t>(
      checked_pow(p_, static_cast<std::uint64_t>(r_) * level)));
  std::vector<std::size_t> idx(level, 0);
  for (;;) {
    GrElement acc = zero();
    std::uint64_t p_pow = 1;
    for (unsigned i = 0; i < level; ++i) {
      acc = add(acc, scalar_mul(teich[idx[i]], p_pow));
      p_pow = (p_pow * p_) % mod_;
    }
    out.push_back(acc);
    unsigned i = 0;
    while (i < level && ++idx[i] == teich.size()) idx[i++] = 0;
    if (i == level) break;
  }
  return out;
}

std::pair<GrElement, GrElement> GaloisRing::unit_decompose(
    const GrElement& a) const {
  check_element(a);
  if (!a.is_unit()) throw NotAUnit("unit_decompose requires a unit");
  GrElement teich = teichmuller_lift(a);
  GrElement one_unit = mul(a, *try_invert(teich));
  return {teich, one_unit};
}

GaloisRing::OneUnitPowerImage GaloisRing::one_unit_power_image(
    unsigned i) const {
  if (p_ == 2 && n_ >= 3) {
    throw UnsupportedRegime(
        "power image of the one-unit group is structured differently for "
        "p = 2, n >= 3");
  }
  return {std::min(i + 1, n_)};
}

std::uint64_t GaloisRing::dlog_teich(const GrElement& a) const {
  check_element(a);
  if (!a.is_unit() || teichmuller_lift(a) != a) {
    throw InvalidParams("dlog base xi requires a Teichmüller unit");
  }
  const std::uint64_t ord = order_;
  if (ord <= 1024) {
    GrElement g = one();
    for (std::uint64_t k = 0; k < ord; ++k) {
      if (g == a) return k;
      g = mul(g, xi());
    }
    throw std::logic_error("dlog scan failed");
  }
  const std::uint64_t step =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(double(ord))));
  std::map<std::vector<std::uint64_t>, std::uint64_t> baby;
  GrElement g = one();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(g.coeffs(), j);
    g = mul(g, xi());
  }
  const GrElement giant = pow(xi(), ord - step % ord);  // xi^(-step)
  GrElement cur = a;
  for (std::uint64_t i = 0; i * step <= ord; ++i) {
    auto it = baby.find(cur.coeffs());
    if (it != baby.end()) return (i * step + it->second) % ord;
    cur = mul(cur, giant);
  }
  throw std::logic_error("baby-step/giant-step failed");
}

std::uint64_t GaloisRing::multiplicative_order(const GrElement& a) const {
  check_element(a);
  if (!a.is_unit()) throw NotAUnit("order undefined for non-units");
  // |GR^x| = p^(r(n-1)) * (p^r - 1)
  std::uint64_t full = order_;
  for (unsigned i = 0; i < r_ * (n_ - 1); ++i) {
    unsigned __int128 next = static_cast<unsigned __int128>(full) * p_;
    if (next > ~0ull) throw UnsupportedRegime("unit group order overflow");
    full = static_cast<std::uint64_t>(next);
  }
  std::uint64_t ord = full;
  for (auto [q, mult] : factorize(full)) {
    for (unsigned i = 0; i < mult; ++i) {
      if (ord % q == 0 && pow(a, ord / q) == one()) {
        ord /= q;
      } else {
        break;
      }
    }
  }
  return ord;
}

BigInt GaloisRing::unit_group_order() const {
  return big_pow(p_, static_cast<std::uint64_t>(r_) * (n_ - 1)) *
         (big_pow(p_, r_) - 1);
}

std::uint64_t GaloisRing::size_u64() const {
  return checked_pow(p_, static_cast<std::uint64_t>(r_) * n_);
}

std::uint64_t GaloisRing::element_rank(const GrElement& a) const {
  check_element(a);
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < r_; ++i) {
    rank = rank * mod_ + a.coeffs()[i];
  }
  return rank;
}

GrElement GaloisRing::element_at(std::uint64_t rank) const {
  std::vector<std::uint64_t> c(r_);
  for (unsigned i = r_; i-- > 0;) {
    c[i] = rank % mod_;
    rank /= mod_;
  }
  return GrElement(self(), std::move(c));
}

std::vector<GrElement> GaloisRing::all_elements(std::uint64_t cap) const {
  if (!pow_at_most(p_, static_cast<std::uint64_t>(r_) * n_, cap)) {
    throw CapExceeded("ring larger than cap");
  }
  const std::uint64_t total = size_u64();
  std::vector<GrElement> out;
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(element_at(k));
  return out;
}

}  // namespace chainring
