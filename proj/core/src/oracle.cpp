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

#include "chainring/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

#include "chainring/classifier.hpp"

namespace chainring::oracle {

namespace {

// Allocation-free multiplier on flattened canonical coefficient words;
// the table builder runs O(N^2) of these.
struct FlatGe {
  std::uint64_t p = 0;
  std::uint64_t mod = 0;  // p^n
  unsigned r = 0;
  std::uint64_t e = 0;
  std::vector<std::uint64_t> slot_mod;
  std::vector<std::uint64_t> pu;
  const std::vector<std::vector<std::uint64_t>>* xi_rows = nullptr;

  explicit FlatGe(const GeRing& ring) {
    const GeParams& P = ring.params();
    p = P.p;
    mod = ring.base()->modulus();
    r = P.r;
    e = P.e;
    slot_mod.resize(e);
    for (std::uint64_t i = 0; i < e; ++i) slot_mod[i] = ring.slot_modulus(i);
    pu = ring.base()->scalar_mul(ring.defining_unit(), p).coeffs();
    xi_rows = &ring.base()->xi_reduction();
  }

  std::size_t span() const { return static_cast<std::size_t>(e) * r; }

  void unrank(std::uint64_t rank, std::uint64_t* out) const {
    for (std::uint64_t i = e; i-- > 0;) {
      for (unsigned j = r; j-- > 0;) {
        out[i * r + j] = rank % slot_mod[i];
        rank /= slot_mod[i];
      }
    }
  }

  std::uint64_t rank(const std::uint64_t* x) const {
    std::uint64_t acc = 0;
    for (std::uint64_t i = 0; i < e; ++i) {
      for (unsigned j = 0; j < r; ++j) acc = acc * slot_mod[i] + x[i * r + j];
    }
    return acc;
  }

  // c += a * b in GR(p^n, r); scratch holds 2r-1 words
  void gr_mul_acc(const std::uint64_t* a, const std::uint64_t* b,
                  std::uint64_t* c, std::uint64_t* scratch) const {
    if (r == 1) {
      c[0] = (c[0] + mulmod(a[0], b[0], mod)) % mod;
      return;
    }
    std::fill(scratch, scratch + 2 * r - 1, 0);
    for (unsigned i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      for (unsigned j = 0; j < r; ++j) {
        scratch[i + j] = (scratch[i + j] + mulmod(a[i], b[j], mod)) % mod;
      }
    }
    for (unsigned k = 2 * r - 2; k >= r; --k) {
      const std::uint64_t top = scratch[k];
      if (top != 0) {
        const auto& row = (*xi_rows)[k - r];
        for (unsigned i = 0; i < r; ++i) {
          scratch[i] = (scratch[i] + mulmod(top, row[i], mod)) % mod;
        }
      }
    }
    for (unsigned i = 0; i < r; ++i) c[i] = (c[i] + scratch[i]) % mod;
  }

  void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
           std::uint64_t* conv, std::uint64_t* scratch) const {
    std::fill(conv, conv + (2 * e - 1) * r, 0);
    for (std::uint64_t i = 0; i < e; ++i) {
      bool zero = true;
      for (unsigned j = 0; j < r; ++j) zero = zero && a[i * r + j] == 0;
      if (zero) continue;
      for (std::uint64_t j = 0; j < e; ++j) {
        gr_mul_acc(a + i * r, b + j * r, conv + (i + j) * r, scratch);
      }
    }
    for (std::uint64_t k = 2 * e - 2; k >= e && k < 2 * e - 1; --k) {
      gr_mul_acc(conv + k * r, pu.data(), conv + (k - e) * r, scratch);
    }
    for (std::uint64_t i = 0; i < e; ++i) {
      for (unsigned j = 0; j < r; ++j) {
        out[i * r + j] = conv[i * r + j] % slot_mod[i];
      }
    }
  }

  void add(const std::uint64_t* a, const std::uint64_t* b,
           std::uint64_t* out) const {
    for (std::uint64_t i = 0; i < e; ++i) {
      for (unsigned j = 0; j < r; ++j) {
        out[i * r + j] = (a[i * r + j] + b[i * r + j]) % slot_mod[i];
      }
    }
  }
};

// Exact division by theta of an element of positive valuation.
GeElement divide_theta(const GeRing& ring, const GeElement& z,
                       const GrElement& u_inverse) {
  const auto& base = *ring.base();
  const std::uint64_t p = ring.params().p;
  const std::uint64_t e = ring.params().e;
  std::vector<std::uint64_t> low = z.slots()[0].coeffs();
  for (auto& c : low) {
    assert(c % p == 0);
    c /= p;
  }
  std::vector<GrElement> slots;
  slots.reserve(e);
  for (std::uint64_t j = 1; j < e; ++j) slots.push_back(z.slots()[j]);
  slots.push_back(base.mul(u_inverse, base.from_coeffs(std::move(low))));
  return ring.from_slots(std::move(slots));
}

std::uint64_t residue_pack(const GrElement& a, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) {
    acc = acc * p + *it % p;
  }
  return acc;
}

}  // namespace

std::uint32_t ExplicitRing::pow(std::uint32_t i, std::uint64_t k) const {
  std::uint32_t acc = one_index;
  std::uint32_t base = i;
  while (k != 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::uint32_t ExplicitRing::index_of(const GeElement& x) const {
  return static_cast<std::uint32_t>(ring->element_rank(x));
}

GeElement ExplicitRing::element(std::uint32_t i) const {
  return ring->element_at(i);
}

ExplicitRing materialize(const GeRingPtr& ring, std::uint64_t cap) {
  const std::uint64_t hard_cap = std::min<std::uint64_t>(cap, 65535);
  if (!ring->size_at_most(hard_cap)) {
    throw CapExceeded("GE ring too large to materialize");
  }
  const GeParams& P = ring->params();
  const std::uint32_t n = static_cast<std::uint32_t>(ring->size_u64());

  ExplicitRing out;
  out.ring = ring;
  out.size = n;

  const FlatGe ops(*ring);
  const std::size_t span = ops.span();

  std::vector<std::uint64_t> flat(static_cast<std::size_t>(n) * span);
  for (std::uint32_t k = 0; k < n; ++k) ops.unrank(k, &flat[k * span]);

  out.add_table.resize(static_cast<std::size_t>(n) * n);
  out.mul_table.resize(static_cast<std::size_t>(n) * n);
  std::vector<std::uint64_t> buf(span);
  std::vector<std::uint64_t> conv((2 * P.e - 1) * P.r);
  std::vector<std::uint64_t> scratch(2 * P.r - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t* a = &flat[static_cast<std::size_t>(i) * span];
    for (std::uint32_t j = i; j < n; ++j) {
      const std::uint64_t* b = &flat[static_cast<std::size_t>(j) * span];
      ops.add(a, b, buf.data());
      const auto sum = static_cast<std::uint16_t>(ops.rank(buf.data()));
      ops.mul(a, b, buf.data(), conv.data(), scratch.data());
      const auto prod = static_cast<std::uint16_t>(ops.rank(buf.data()));
      out.add_table[static_cast<std::size_t>(i) * n + j] = sum;
      out.add_table[static_cast<std::size_t>(j) * n + i] = sum;
      out.mul_table[static_cast<std::size_t>(i) * n + j] = prod;
      out.mul_table[static_cast<std::size_t>(j) * n + i] = prod;
    }
  }

  out.valuation.resize(n);
  out.unit_indices.clear();
  for (std::uint32_t k = 0; k < n; ++k) {
    const std::uint64_t* x = &flat[static_cast<std::size_t>(k) * span];
    std::uint64_t v = P.s;
    for (std::uint64_t i = 0; i < P.e; ++i) {
      unsigned slot_val = P.n;
      bool zero = true;
      for (unsigned j = 0; j < P.r; ++j) {
        const std::uint64_t c = x[i * P.r + j];
        if (c != 0) zero = false;
        slot_val = std::min(slot_val, int_p_valuation(c, P.p, P.n));
      }
      if (!zero) v = std::min(v, i + P.e * slot_val);
    }
    out.valuation[k] = static_cast<std::uint8_t>(v);
    bool unit = false;
    for (unsigned j = 0; j < P.r; ++j) unit = unit || x[j] % P.p != 0;
    if (unit) out.unit_indices.push_back(k);
  }

  out.zero_index = out.index_of(ring->zero());
  out.one_index = out.index_of(ring->one());
  out.theta_index = out.index_of(ring->theta());

  const auto& base = ring->base();
  out.teich = base->teichmuller_set(hard_cap);
  out.teich_embed.resize(out.teich.size());
  std::vector<std::uint32_t> residue_lut(out.teich.size());
  for (std::size_t j = 0; j < out.teich.size(); ++j) {
    out.teich_embed[j] = out.index_of(ring->embed_base(out.teich[j]));
    residue_lut[residue_pack(out.teich[j], P.p)] =
        static_cast<std::uint32_t>(j);
  }

  const GrElement u_inv = *base->try_invert(ring->defining_unit());
  out.teich_digits.resize(static_cast<std::size_t>(n) * P.s);
  for (std::uint32_t k = 0; k < n; ++k) {
    GeElement y = ring->element_at(k);
    for (std::uint64_t d = 0; d < P.s; ++d) {
      const std::uint32_t j = residue_lut[residue_pack(y.slots()[0], P.p)];
      out.teich_digits[static_cast<std::size_t>(k) * P.s + d] =
          static_cast<std::uint16_t>(j);
      y = divide_theta(*ring, ring->sub(y, ring->embed_base(out.teich[j])),
                       u_inv);
    }
  }
  return out;
}

namespace {

// sigma^tw as a permutation of Teichmüller indices (0 is zero, 1 + k is
// xi^k).
std::uint32_t twist_teich_index(std::uint32_t j, std::uint64_t p_pow_tw,
                                std::uint64_t order) {
  if (j == 0) return 0;
  return 1 + static_cast<std::uint32_t>(
                 mulmod(j - 1, p_pow_tw % order, order));
}

}  // namespace

std::optional<IsomorphismWitness> oracle_isomorphic(const ExplicitRing& r1,
                                                    const ExplicitRing& r2) {
  const GeParams& P = r1.ring->params();
  if (!(P == r2.ring->params()) ||
      !r1.ring->base()->same_ring(*r2.ring->base())) {
    throw InvalidParams("rings have different shapes");
  }
  const std::uint32_t n = r1.size;
  const auto& gr = *r1.ring->base();
  const std::uint64_t order = gr.teich_order();

  std::vector<std::uint32_t> prefilter_target(P.r);
  std::vector<std::uint64_t> p_pow(P.r);
  for (unsigned tw = 0; tw < P.r; ++tw) {
    prefilter_target[tw] = r2.index_of(r2.ring->embed_base(
        gr.scalar_mul(gr.frobenius(r1.ring->defining_unit(), tw), P.p)));
    p_pow[tw] = order == 1 ? 0 : powmod(P.p % order, tw, order);
  }

  std::vector<std::uint16_t> map(n);
  std::vector<char> seen(n);
  for (std::uint32_t th = 0; th < n; ++th) {
    if (r2.valuation[th] != 1) continue;
    std::vector<std::uint32_t> thpow;
    for (unsigned tw = 0; tw < P.r; ++tw) {
      if (r2.pow(th, P.e) != prefilter_target[tw]) continue;
      if (thpow.empty()) {
        thpow.resize(P.s);
        thpow[0] = r2.one_index;
        for (std::uint64_t k = 1; k < P.s; ++k) {
          thpow[k] = r2.mul(thpow[k - 1], th);
        }
      }
      // phi(sum gamma_k theta^k) = sum sigma^tw(gamma_k) theta'^k
      for (std::uint32_t x = 0; x < n; ++x) {
        std::uint32_t acc = r2.zero_index;
        for (std::uint64_t k = 0; k < P.s; ++k) {
          const std::uint32_t digit =
              r1.teich_digits[static_cast<std::size_t>(x) * P.s + k];
          const std::uint32_t image =
              r2.teich_embed[twist_teich_index(digit, p_pow[tw], order)];
          acc = r2.add(acc, r2.mul(image, thpow[k]));
        }
        map[x] = static_cast<std::uint16_t>(acc);
      }
      std::fill(seen.begin(), seen.end(), 0);
      bool ok = true;
      for (std::uint32_t x = 0; x < n && ok; ++x) {
        if (seen[map[x]]) ok = false;
        seen[map[x]] = 1;
      }
      for (std::uint32_t x = 0; x < n && ok; ++x) {
        for (std::uint32_t y = x; y < n; ++y) {
          if (map[r1.add(x, y)] != r2.add(map[x], map[y]) ||
              map[r1.mul(x, y)] != r2.mul(map[x], map[y])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        return IsomorphismWitness{tw, th, map};
      }
    }
  }
  return std::nullopt;
}

bool verify_witness(const ExplicitRing& r1, const ExplicitRing& r2,
                    const IsomorphismWitness& w) {
  const std::uint32_t n = r1.size;
  if (r2.size != n || w.full_map.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[w.full_map[x]]) return false;
    seen[w.full_map[x]] = 1;
    if (r1.valuation[x] != r2.valuation[w.full_map[x]]) return false;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x; y < n; ++y) {
      if (w.full_map[r1.add(x, y)] !=
              r2.add(w.full_map[x], w.full_map[y]) ||
          w.full_map[r1.mul(x, y)] != r2.mul(w.full_map[x], w.full_map[y])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<UnitClass> oracle_class_partition(const GeParams& params,
                                              const Caps& caps) {
  auto gr = GaloisRing::make(params.p, params.n, params.r);
  if (!pow_at_most(params.p,
                   static_cast<std::uint64_t>(params.r) * params.s,
                   std::min<std::uint64_t>(caps.oracle, 65535))) {
    throw CapExceeded("GE rings too large for the class partition");
  }

  // defining units give literally the same quotient iff p*u agrees mod p^n
  std::vector<std::vector<GrElement>> groups;
  std::map<std::vector<std::uint64_t>, std::size_t> group_of;
  const std::uint64_t total = gr->size_u64();
  for (std::uint64_t k = 0; k < total; ++k) {
    GrElement u = gr->element_at(k);
    if (!u.is_unit()) continue;
    const auto key = gr->scalar_mul(u, params.p).coeffs();
    auto [it, inserted] = group_of.emplace(key, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(std::move(u));
  }

  struct Cls {
    ExplicitRing ring;
    std::vector<GrElement> members;
  };
  std::vector<Cls> classes;
  for (auto& group : groups) {
    ExplicitRing ring =
        materialize(GeRing::make(gr, params, group.front()), caps.oracle);
    bool merged = false;
    for (auto& cls : classes) {
      if (oracle_isomorphic(ring, cls.ring)) {
        cls.members.insert(cls.members.end(), group.begin(), group.end());
        merged = true;
        break;
      }
    }
    if (!merged) {
      classes.push_back(Cls{std::move(ring), std::move(group)});
    }
  }

  std::vector<UnitClass> out;
  out.reserve(classes.size());
  for (auto& cls : classes) {
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(UnitClass{cls.members.front(), std::move(cls.members)});
  }
  std::sort(out.begin(), out.end(),
            [](const UnitClass& a, const UnitClass& b) {
              return a.representative < b.representative;
            });
  return out;
}

std::vector<std::uint64_t> abelian_invariants(
    const std::vector<GrElement>& elements) {
  if (elements.empty()) throw InvalidParams("empty element list");
  const auto& gr = elements.front().ring();
  const std::uint64_t n = elements.size();

  std::set<std::vector<std::uint64_t>> universe;
  for (const auto& x : elements) universe.insert(x.coeffs());
  if (universe.size() != n) throw InvalidParams("duplicate elements");
  if (universe.count(gr->one().coeffs()) == 0) {
    throw InvalidParams("identity missing");
  }
  // closure (defensive); sampled above 1024 elements
  const std::size_t probe = n <= 1024 ? n : 16;
  for (const auto& x : elements) {
    for (std::size_t j = 0; j < probe; ++j) {
      if (universe.count(gr->mul(x, elements[j]).coeffs()) == 0) {
        throw InvalidParams("not closed under multiplication");
      }
    }
  }
  if (n == 1) return {};

  // one partition per prime from the q^k-torsion counts
  std::vector<std::vector<unsigned>> partitions;
  std::vector<std::uint64_t> primes;
  for (auto [q, a] : factorize(n)) {
    std::vector<unsigned> log_counts(a + 1, 0);
    for (unsigned k = 0; k <= a; ++k) {
      const std::uint64_t exp = checked_pow(q, k);
      std::uint64_t cnt = 0;
      for (const auto& x : elements) {
        if (gr->pow(x, exp) == gr->one()) ++cnt;
      }
      unsigned lg = 0;
      std::uint64_t c = cnt;
      while (c % q == 0) {
        c /= q;
        ++lg;
      }
      if (c != 1) throw InvalidParams("torsion count not a power of q");
      log_counts[k] = lg;
    }
    // conj[k] = number of cyclic factors of order >= q^k
    std::vector<unsigned> conj(a + 1, 0);
    for (unsigned k = 1; k <= a; ++k) conj[k] = log_counts[k] - log_counts[k - 1];
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= conj[1]; ++i) {
      unsigned size = 0;
      for (unsigned k = 1; k <= a; ++k) {
        if (conj[k] >= i) size = k;
      }
      parts.push_back(size);
    }
    // parts come out descending
    partitions.push_back(std::move(parts));
    primes.push_back(q);
  }

  std::size_t max_parts = 0;
  for (const auto& parts : partitions) {
    max_parts = std::max(max_parts, parts.size());
  }
  std::vector<std::uint64_t> factors;
  for (std::size_t i = 0; i < max_parts; ++i) {
    std::uint64_t d = 1;
    for (std::size_t qi = 0; qi < primes.size(); ++qi) {
      if (i < partitions[qi].size()) {
        d *= checked_pow(primes[qi], partitions[qi][i]);
      }
    }
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility
  return factors;
}

TheoremCheck verify_theorem_2_4(const GeParams& params, const GrElement& u,
                                const Caps& caps) {
  const auto& gr = u.ring();
  const FlatResult flat = compute_flat(params);
  auto ring = GeRing::make(gr, params, u);

  std::set<std::vector<std::uint64_t>> brute;
  for (const auto& g : ring->l_e_bruteforce(caps.materialize)) {
    brute.insert(g.coeffs());
  }
  std::set<std::vector<std::uint64_t>> formula;
  for (const auto& g : materialize_l_e(gr, params, flat.flat,
                                       caps.materialize)) {
    formula.insert(g.coeffs());
  }

  TheoremCheck out;
  out.flat = flat.flat;
  std::set_difference(brute.begin(), brute.end(), formula.begin(),
                      formula.end(),
                      std::back_inserter(out.only_bruteforce));
  std::set_difference(formula.begin(), formula.end(), brute.begin(),
                      brute.end(),
                      std::back_inserter(out.only_level_formula));
  out.status = out.only_bruteforce.empty() && out.only_level_formula.empty()
                   ? TheoremCheck::Status::kEqual
                   : TheoremCheck::Status::kMismatch;
  return out;
}

}  // namespace chainring::oracle
