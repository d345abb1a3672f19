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

#include "chainring/classifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "chainring/oracle.hpp"

namespace chainring {

FlatResult compute_flat(const GeParams& params) {
  FlatResult out;
  out.t = params.t();
  out.hypothesis_ok = params.hypothesis_ok();
  std::uint64_t e = params.e;
  while (e % params.p == 0) {
    ++out.omega;
    e /= params.p;
  }
  const unsigned __int128 pt =
      static_cast<unsigned __int128>(params.p) * params.t();
  if (params.n == 2 && pt <= params.e) {
    out.flat = 1;
    out.branch = FlatBranch::kSmallTCharTwo;
    out.boundary_hit = (pt == params.e);
  } else {
    out.flat = std::min<unsigned>(out.omega + 1, params.n);
    out.branch = FlatBranch::kOmegaMin;
  }
  out.partial = std::min<unsigned>(out.flat, params.n - 1);
  return out;
}

LeDescriptor l_e_descriptor(const GaloisRingPtr& gr, const GeParams& params,
                            const FlatResult& flat) {
  return {gr->teichmuller_power_subgroup(params.e).generator, flat.flat};
}

std::vector<GrElement> materialize_l_e(const GaloisRingPtr& gr,
                                       const GeParams& params, unsigned flat,
                                       std::uint64_t cap) {
  const auto sub = gr->teichmuller_power_subgroup(params.e);
  const unsigned level = std::min<unsigned>(flat, gr->n());
  const std::uint64_t p_flat = checked_pow(gr->p(), level);
  const auto betas = gr->residue_system(gr->n() - level, cap);
  if (sub.order > cap / betas.size()) {
    throw CapExceeded("e-th power subgroup larger than cap");
  }
  std::set<std::vector<std::uint64_t>> seen;
  GrElement eta_pow = gr->one();
  for (std::uint64_t j = 0; j < sub.order; ++j) {
    for (const auto& beta : betas) {
      const GrElement one_unit =
          gr->add(gr->one(), gr->scalar_mul(beta, p_flat));
      seen.insert(gr->mul(eta_pow, one_unit).coeffs());
    }
    eta_pow = gr->mul(eta_pow, sub.generator);
  }
  if (seen.size() != sub.order * betas.size()) {
    throw std::logic_error("power subgroup product not direct");
  }
  std::vector<GrElement> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.push_back(gr->from_coeffs(c));
  return out;
}

BigInt UrSet::size() const {
  return BigInt(d) *
         big_pow(gr->p(), static_cast<std::uint64_t>(gr->r()) * (partial - 1));
}

std::vector<GrElement> UrSet::members(std::uint64_t cap) const {
  if (size() > cap) throw CapExceeded("transversal larger than cap");
  const auto betas = gr->residue_system(partial - 1, cap);
  std::vector<GrElement> out;
  out.reserve(static_cast<std::size_t>(d) * betas.size());
  GrElement chi_pow = gr->one();
  for (std::uint64_t a = 0; a < d; ++a) {
    for (const auto& beta : betas) {
      out.push_back(gr->add(chi_pow, gr->scalar_mul(beta, gr->p())));
    }
    chi_pow = gr->mul(chi_pow, chi);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("transversal members not distinct");
  }
  return out;
}

UrSet build_ur_set(const GaloisRingPtr& gr, const GeParams& params,
                   const FlatResult& flat) {
  UrSet out{gr, gr->one(), gr->one(), 0, flat.partial};
  out.d = std::gcd(gr->teich_order(), params.e);
  out.chi = gr->pow(gr->xi(), gr->teich_order() / out.d);
  out.eta = gr->teichmuller_power_subgroup(params.e).generator;
  return out;
}

namespace {

// Membership in <xi^d> * (1 + p^flat GR) through the unit decomposition:
// the Teichmüller part must land in the order-(p^r-1)/d subgroup and the
// one-unit part must be trivial to depth flat.
bool level_membership(const GaloisRingPtr& gr, const GrElement& w,
                      std::uint64_t d, unsigned flat) {
  const auto [teich, one_unit] = gr->unit_decompose(w);
  if (gr->dlog_teich(teich) % d != 0) return false;
  const GrElement delta = gr->sub(one_unit, gr->one());
  return delta.p_valuation() >= std::min<unsigned>(flat, gr->n());
}

}  // namespace

std::optional<ReduceResult> reduce_to_representative(
    const GrElement& u, const GeParams& params, const FlatResult& flat,
    const UrSet& ur, const Caps& caps) {
  if (!u.is_unit()) throw NotAUnit("defining element must be a unit");
  const GaloisRingPtr& gr = ur.gr;
  const auto members = ur.members(caps.materialize);

  const bool small = pow_at_most(
      params.p, static_cast<std::uint64_t>(params.r) * params.s, caps.oracle);
  std::set<std::vector<std::uint64_t>> actual_powers;
  GeRingPtr host;
  if (small) {
    host = GeRing::make(gr, params, u);
    for (const auto& g : host->l_e_bruteforce(caps.oracle)) {
      actual_powers.insert(g.coeffs());
    }
  }

  for (const GrElement& v : members) {
    const GrElement w = gr->mul(u, *gr->try_invert(v));
    if (small) {
      if (actual_powers.count(w.coeffs()) == 0) continue;
      // recover an explicit root: z^e = w in GE(u)
      std::optional<GeElement> z;
      for (const GeElement& cand : host->all_units(caps.oracle)) {
        if (host->pow(cand, params.e) == host->embed_base(w)) {
          z = cand;
          break;
        }
      }
      if (!z) throw std::logic_error("e-th power set inconsistent");
      return ReduceResult{v, CertMode::kWitness, std::move(z)};
    }
    if (level_membership(gr, w, ur.d, flat.flat)) {
      return ReduceResult{
          v,
          flat.hypothesis_ok ? CertMode::kTheorem : CertMode::kUnverified,
          std::nullopt};
    }
  }
  return std::nullopt;
}

std::vector<FrobeniusOrbit> frobenius_orbits(const UrSet& ur,
                                             std::uint64_t cap) {
  const GaloisRingPtr& gr = ur.gr;
  const auto members = ur.members(cap);
  std::set<std::vector<std::uint64_t>> universe;
  for (const auto& m : members) universe.insert(m.coeffs());

  std::vector<FrobeniusOrbit> out;
  std::set<std::vector<std::uint64_t>> visited;
  for (const GrElement& m : members) {
    if (visited.count(m.coeffs())) continue;
    FrobeniusOrbit orbit{m, {}};
    for (unsigned i = 0; i < gr->r(); ++i) {
      const GrElement image = gr->frobenius(m, i);
      if (universe.count(image.coeffs()) == 0) {
        throw std::logic_error("transversal not Frobenius-stable");
      }
      if (visited.insert(image.coeffs()).second) {
        orbit.members.push_back(image);
      }
    }
    if (gr->r() % orbit.members.size() != 0) {
      throw std::logic_error("orbit size does not divide r");
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

BigInt count_formula(const GeParams& params) {
  const FlatResult flat = compute_flat(params);
  BigInt total = 0;
  for (unsigned i = 1; i <= params.r; ++i) {
    const std::uint64_t ri = std::gcd<std::uint64_t>(params.r, i);
    const BigInt fixed =
        gcd(big_pow(params.p, ri) - 1, BigInt(params.e)) *
        big_pow(params.p, static_cast<std::uint64_t>(flat.partial - 1) * ri);
    total += fixed;
  }
  if (total % params.r != 0) {
    throw std::logic_error("Burnside sum not divisible by r");
  }
  return total / params.r;
}

IsoVerdict ge_isomorphic(const GrElement& u, const GrElement& v,
                         const GeParams& params, const Caps& caps) {
  if (!u.is_unit() || !v.is_unit()) {
    throw NotAUnit("defining elements must be units");
  }
  const GaloisRingPtr gr = u.ring();
  if (params.hypothesis_ok()) {
    const FlatResult flat = compute_flat(params);
    const UrSet ur = build_ur_set(gr, params, flat);
    const auto ru = reduce_to_representative(u, params, flat, ur, caps);
    const auto rv = reduce_to_representative(v, params, flat, ur, caps);
    if (ru && rv) {
      for (unsigned i = 0; i < params.r; ++i) {
        if (gr->frobenius(rv->rep, i) == ru->rep) {
          return {true, i, IsoVerdict::Mode::kTheorem};
        }
      }
      return {false, std::nullopt, IsoVerdict::Mode::kTheorem};
    }
    // fall through to the brute-force engine
  }
  if (!pow_at_most(params.p,
                   static_cast<std::uint64_t>(params.r) * params.s,
                   caps.oracle)) {
    throw CapExceeded(
        "parameters outside the certified regime and the ring is too large "
        "for the brute-force engine");
  }
  const auto r1 = oracle::materialize(GeRing::make(gr, params, u), caps.oracle);
  const auto r2 = oracle::materialize(GeRing::make(gr, params, v), caps.oracle);
  const auto witness = oracle::oracle_isomorphic(r1, r2);
  if (witness) {
    return {true, witness->base_twist, IsoVerdict::Mode::kOracle};
  }
  return {false, std::nullopt, IsoVerdict::Mode::kOracle};
}

bool ClassificationReport::operator==(const ClassificationReport& o) const {
  return params == o.params && omega == o.omega && flat == o.flat &&
         partial == o.partial && d == o.d && chi == o.chi && eta == o.eta &&
         hypothesis_ok == o.hypothesis_ok &&
         count_formula == o.count_formula &&
         count_enumerated == o.count_enumerated && orbits == o.orbits &&
         notes == o.notes;
}

ClassificationReport classify(const GeParams& params, const Caps& caps) {
  auto gr = GaloisRing::make(params.p, params.n, params.r);
  const FlatResult flat = compute_flat(params);
  const UrSet ur = build_ur_set(gr, params, flat);

  ClassificationReport rep;
  rep.params = params;
  rep.omega = flat.omega;
  rep.flat = flat.flat;
  rep.partial = flat.partial;
  rep.d = ur.d;
  rep.chi = ur.chi.coeffs();
  rep.eta = ur.eta.coeffs();
  rep.hypothesis_ok = flat.hypothesis_ok;
  rep.count_formula = count_formula(params);

  if (params.normalized_from_n) {
    rep.notes.push_back("parameters renormalized from n = " +
                        std::to_string(*params.normalized_from_n) +
                        " (input had t = 0)");
  }
  if (flat.boundary_hit) {
    rep.notes.push_back("boundary case p*t = e resolved to the t <= e/p branch");
  }
  if (!flat.hypothesis_ok) {
    rep.notes.push_back(
        "(p-1) divides e: outside the certified regime; the count is "
        "heuristic here, cross-check with the brute-force engine");
  }

  try {
    const auto orbits = frobenius_orbits(ur, caps.materialize);
    rep.count_enumerated = orbits.size();
    for (const auto& orbit : orbits) {
      OrbitData data;
      data.rep = orbit.representative.coeffs();
      for (const auto& m : orbit.members) data.members.push_back(m.coeffs());
      rep.orbits.push_back(std::move(data));
    }
    if (BigInt(*rep.count_enumerated) != rep.count_formula) {
      throw std::logic_error("orbit enumeration disagrees with the formula");
    }
  } catch (const CapExceeded&) {
    rep.notes.push_back("transversal above cap; orbits omitted");
  }
  return rep;
}

}  // namespace chainring
