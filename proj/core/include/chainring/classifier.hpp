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

#include <optional>
#include <string>
#include <vector>

#include "chainring/ge_ring.hpp"

namespace chainring {

enum class FlatBranch {
  kSmallTCharTwo,  // t <= e/p and n = 2
  kOmegaMin,       // otherwise: min(omega + 1, n)
};

/// The level structure of the e-th power subgroup: (R^x)^e meets the
/// embedded unit group in <xi^e> * (1 + p^flat GR).
struct FlatResult {
  unsigned omega = 0;    // max { i >= 1 : p^i | e }, 0 when p does not divide e
  unsigned flat = 0;     // in [1, n]
  unsigned partial = 0;  // min(flat, n-1)
  std::uint64_t t = 0;   // s - (n-1)e
  bool hypothesis_ok = false;
  FlatBranch branch = FlatBranch::kOmegaMin;
  bool boundary_hit = false;  // p*t == e with n == 2: the inclusive branch fired
};

FlatResult compute_flat(const GeParams& params);

struct LeDescriptor {
  GrElement eta;  // xi^e
  unsigned flat;
};
LeDescriptor l_e_descriptor(const GaloisRingPtr& gr, const GeParams& params,
                            const FlatResult& flat);

/// The set <xi^e> * (1 + p^flat GR), sorted; throws CapExceeded.
std::vector<GrElement> materialize_l_e(const GaloisRingPtr& gr,
                                       const GeParams& params, unsigned flat,
                                       std::uint64_t cap =
                                           kDefaultMaterializeCap);

/// Transversal of defining units: <chi> + p * R_r(partial - 1) with
/// chi = xi^((p^r-1)/d), d = gcd(p^r - 1, e).
struct UrSet {
  GaloisRingPtr gr;
  GrElement chi;
  GrElement eta;
  std::uint64_t d = 0;
  unsigned partial = 0;

  BigInt size() const;
  /// All chi^a + p*beta, lexicographically sorted; throws CapExceeded.
  std::vector<GrElement> members(std::uint64_t cap =
                                     kDefaultMaterializeCap) const;
};

UrSet build_ur_set(const GaloisRingPtr& gr, const GeParams& params,
                   const FlatResult& flat);

enum class CertMode {
  kWitness,     // an explicit e-th root certifies the reduction
  kTheorem,     // level-structure membership in the certified regime
  kUnverified,  // level-structure membership outside the certified regime
};

struct ReduceResult {
  GrElement rep;
  CertMode cert;
  /// z with z^e = u * rep^(-1) in GE(u), when searched for and found.
  std::optional<GeElement> root_witness;
};

/// Representative v of u in the transversal with GE(u) isomorphic to GE(v).
/// nullopt when no transversal member works (possible outside the certified
/// regime); callers then fall back to the brute-force engine.
std::optional<ReduceResult> reduce_to_representative(
    const GrElement& u, const GeParams& params, const FlatResult& flat,
    const UrSet& ur, const Caps& caps = {});

struct FrobeniusOrbit {
  GrElement representative;          // lexicographically least member
  std::vector<GrElement> members;    // sigma^i(rep), deduplicated, i ascending
};

/// Partition of the transversal into Frobenius orbits, ordered by
/// representative.
std::vector<FrobeniusOrbit> frobenius_orbits(const UrSet& ur,
                                             std::uint64_t cap =
                                                 kDefaultMaterializeCap);

/// Exact Burnside evaluation
/// (1/r) sum_i gcd(p^gcd(r,i) - 1, e) * p^((partial-1) gcd(r,i));
/// the sum is asserted divisible by r.
BigInt count_formula(const GeParams& params);

struct IsoVerdict {
  bool isomorphic = false;
  std::optional<unsigned> frobenius_twist;
  enum class Mode { kTheorem, kOracle } mode = Mode::kTheorem;
};

/// Decides GE(u) ≅ GE(v).  In the certified regime this reduces both sides
/// to transversal representatives and compares Frobenius orbits; otherwise it
/// delegates to the brute-force engine when the ring is materializable and
/// throws CapExceeded when it is not.
IsoVerdict ge_isomorphic(const GrElement& u, const GrElement& v,
                         const GeParams& params, const Caps& caps = {});

struct OrbitData {
  std::vector<std::uint64_t> rep;
  std::vector<std::vector<std::uint64_t>> members;
  bool operator==(const OrbitData&) const = default;
};

struct ClassificationReport {
  GeParams params;
  unsigned omega = 0;
  unsigned flat = 0;
  unsigned partial = 0;
  std::uint64_t d = 0;
  std::vector<std::uint64_t> chi;
  std::vector<std::uint64_t> eta;
  bool hypothesis_ok = false;
  BigInt count_formula;
  std::optional<std::uint64_t> count_enumerated;
  std::vector<OrbitData> orbits;
  std::vector<std::string> notes;

  bool operator==(const ClassificationReport& o) const;
};

ClassificationReport classify(const GeParams& params, const Caps& caps = {});

}  // namespace chainring
