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

#include "chainring/selftest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "chainring/oracle.hpp"
#include "chainring/serialize.hpp"

namespace chainring::selftest {

namespace {

std::string params_str(const GeParams& P) {
  std::ostringstream os;
  os << "(" << P.p << "," << P.n << "," << P.r << "," << P.e << "," << P.s
     << ")";
  return os.str();
}

std::string coeffs_str(const std::vector<std::uint64_t>& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  return os.str();
}

bool emit(const Sink& sink, const std::string& name, bool ok,
          const std::string& fail_detail = "") {
  sink(CheckResult{name, ok ? Status::kPass : Status::kFail,
                   ok ? "" : fail_detail});
  return ok;
}

void emit_finding(const Sink& sink, const std::string& name,
                  const std::string& detail) {
  sink(CheckResult{name, Status::kFinding, detail});
}

}  // namespace

std::vector<GeParams> sweep_tuples(const std::vector<std::uint64_t>& primes,
                                   std::uint64_t size_cap) {
  std::vector<GeParams> out;
  for (std::uint64_t p : primes) {
    for (unsigned r = 1; pow_at_most(p, 2ull * r, size_cap); ++r) {
      for (unsigned n = 2;
           pow_at_most(p, static_cast<std::uint64_t>(r) * n, size_cap);
           ++n) {
        for (std::uint64_t e = 1;; ++e) {
          const std::uint64_t s_min = (n - 1) * e + 1;
          if (!pow_at_most(p, static_cast<std::uint64_t>(r) * s_min,
                           size_cap)) {
            break;
          }
          for (std::uint64_t t = 1; t <= e; ++t) {
            const std::uint64_t s = (n - 1) * e + t;
            if (!pow_at_most(p, static_cast<std::uint64_t>(r) * s,
                             size_cap)) {
              break;
            }
            out.push_back(GeParams::make(p, n, r, e, s));
          }
        }
      }
    }
  }
  return out;
}

bool check_regressions(const Sink& sink) {
  bool ok = true;

  {
    auto gr = GaloisRing::make(3, 2, 2);
    ok &= emit(sink, "GR(9,2) defining polynomial",
               gr->defining_poly_mod_p() == poly::Poly{2, 1, 1} &&
                   gr->defining_poly() == poly::Poly{8, 4, 1});
    ok &= emit(sink, "GR(9,2) xi has order 8",
               gr->multiplicative_order(gr->xi()) == 8);
    const std::vector<std::vector<std::uint64_t>> expected = {
        {0, 0}, {1, 0}, {0, 1}, {1, 5}, {5, 8},
        {8, 0}, {0, 8}, {8, 4}, {4, 1}};
    std::vector<std::vector<std::uint64_t>> got;
    for (const auto& g : gr->teichmuller_set()) got.push_back(g.coeffs());
    ok &= emit(sink, "GR(9,2) Teichmüller set", got == expected);
  }

  {
    const auto params = GeParams::make(3, 2, 1, 2, 3);
    const auto report = classify(params);
    ok &= emit(sink, "classify (3,2,1,2,3): two classes, reps 1 and 8",
               report.count_formula == 2 && report.count_enumerated == 2 &&
                   report.orbits.size() == 2 &&
                   report.orbits[0].rep == std::vector<std::uint64_t>{1} &&
                   report.orbits[1].rep == std::vector<std::uint64_t>{8});
  }

  {
    const auto params = GeParams::make(3, 2, 2, 18, 25);
    const auto report = classify(params);
    ok &= emit(sink, "classify (3,2,2,18,25): flat 2, d 2, chi 8, count 2",
               report.flat == 2 && report.partial == 1 && report.d == 2 &&
                   report.chi == std::vector<std::uint64_t>{8, 0} &&
                   report.count_formula == 2 &&
                   report.count_enumerated == 2);
  }

  {
    const auto params = GeParams::make(3, 2, 1, 2, 3);
    auto gr = GaloisRing::make(3, 2, 1);
    const auto r1 =
        oracle::materialize(GeRing::make(gr, params, gr->from_int(1)));
    const auto r2 =
        oracle::materialize(GeRing::make(gr, params, gr->from_int(2)));
    const auto r8 =
        oracle::materialize(GeRing::make(gr, params, gr->from_int(8)));
    ok &= emit(sink, "27-element rings GE(1), GE(2) not isomorphic",
               !oracle::oracle_isomorphic(r1, r2).has_value());
    const auto w = oracle::oracle_isomorphic(r2, r8);
    ok &= emit(sink, "27-element rings GE(2), GE(8) isomorphic (verified)",
               w.has_value() && oracle::verify_witness(r2, r8, *w));
    const auto verdict =
        ge_isomorphic(gr->from_int(1), gr->from_int(2), params);
    ok &= emit(sink, "ge_isomorphic(1, 2) at (3,2,1,2,3) is false",
               !verdict.isomorphic);
  }

  {
    const auto params = GeParams::make(5, 2, 1, 3, 5);
    const auto report = classify(params);
    const auto classes = oracle::oracle_class_partition(params);
    ok &= emit(sink, "classify (5,2,1,3,5): single class, oracle agrees",
               report.count_formula == 1 && classes.size() == 1);
  }
  return ok;
}

bool check_theorem_sweep(const Sink& sink, const Caps& caps) {
  bool ok = true;
  for (const GeParams& params : sweep_tuples({2, 3, 5}, caps.oracle)) {
    auto gr = GaloisRing::make(params.p, params.n, params.r);
    const FlatResult flat = compute_flat(params);
    const UrSet ur = build_ur_set(gr, params, flat);
    std::vector<GrElement> members;
    try {
      members = ur.members(caps.materialize);
    } catch (const CapExceeded&) {
      sink(CheckResult{"level sweep " + params_str(params), Status::kSkipped,
                       "transversal above cap"});
      continue;
    }
    bool tuple_ok = true;
    for (const GrElement& u : members) {
      const auto check = oracle::verify_theorem_2_4(params, u, caps);
      const bool equal = check.status == oracle::TheoremCheck::Status::kEqual;
      if (params.hypothesis_ok()) {
        if (!equal) {
          tuple_ok = false;
          ok = emit(sink,
                    "level sweep " + params_str(params) + " u=" +
                        coeffs_str(u.coeffs()),
                    false, "certified-regime mismatch") &&
               ok;
        }
      } else {
        nlohmann::json witness = nullptr;
        if (!equal) {
          witness = nlohmann::json{
              {"only_bruteforce", check.only_bruteforce},
              {"only_level_formula", check.only_level_formula}};
        }
        emit_finding(sink,
                     "level finding " + params_str(params) + " u=" +
                         coeffs_str(u.coeffs()),
                     finding_json("level_structure", params,
                                  equal ? "ok" : "mismatch", witness)
                         .dump());
      }
    }
    if (params.hypothesis_ok() && tuple_ok) {
      emit(sink, "level sweep " + params_str(params), true);
    }
  }
  return ok;
}

bool check_double_count_sweep(const Sink& sink, const Caps& caps) {
  bool ok = true;
  for (const GeParams& params : sweep_tuples({2, 3, 5}, caps.oracle)) {
    if (!params.hypothesis_ok()) continue;
    auto gr = GaloisRing::make(params.p, params.n, params.r);
    const FlatResult flat = compute_flat(params);
    const UrSet ur = build_ur_set(gr, params, flat);
    const BigInt formula = count_formula(params);
    const auto orbits = frobenius_orbits(ur, caps.materialize);
    const auto classes = oracle::oracle_class_partition(params, caps);
    ok &= emit(sink, "double count " + params_str(params),
               formula == BigInt(orbits.size()) &&
                   orbits.size() == classes.size(),
               "formula=" + formula.str() +
                   " orbits=" + std::to_string(orbits.size()) +
                   " classes=" + std::to_string(classes.size()));
  }
  return ok;
}

bool check_burnside_sweep(const Sink& sink, const Caps& caps) {
  bool ok = true;
  for (const GeParams& params : sweep_tuples({2, 3, 5}, caps.oracle)) {
    auto gr = GaloisRing::make(params.p, params.n, params.r);
    const FlatResult flat = compute_flat(params);
    const UrSet ur = build_ur_set(gr, params, flat);
    std::vector<GrElement> members;
    try {
      members = ur.members(caps.materialize);
    } catch (const CapExceeded&) {
      continue;
    }
    bool tuple_ok = true;
    for (unsigned i = 1; i <= params.r; ++i) {
      std::uint64_t fixed = 0;
      for (const GrElement& m : members) {
        if (gr->frobenius(m, i % params.r) == m) ++fixed;
      }
      const std::uint64_t ri = std::gcd<std::uint64_t>(params.r, i);
      const BigInt expected =
          gcd(big_pow(params.p, ri) - 1, BigInt(params.e)) *
          big_pow(params.p,
                  static_cast<std::uint64_t>(flat.partial - 1) * ri);
      if (BigInt(fixed) != expected) tuple_ok = false;
    }
    ok &= emit(sink, "fixed points " + params_str(params), tuple_ok);
  }
  return ok;
}

namespace {

bool structure_suite_one(const Sink& sink, std::uint64_t p, unsigned n,
                         unsigned r, std::uint64_t cap) {
  auto gr = GaloisRing::make(p, n, r);
  const auto elements = gr->all_elements(cap);
  const std::uint64_t total = elements.size();
  std::ostringstream tag;
  tag << "GR(" << gr->modulus() << "," << r << ")";
  bool ok = true;

  // digit expansion reassembles exactly, digits stay Teichmüller
  {
    std::set<std::vector<std::uint64_t>> teich;
    for (const auto& g : gr->teichmuller_set(cap)) teich.insert(g.coeffs());
    bool good = true;
    for (const auto& a : elements) {
      const TeichDigits d = gr->digit_expansion(a);
      good = good && gr->from_digits(d) == a;
      for (const auto& digit : d.digits) {
        good = good && teich.count(digit.coeffs()) > 0;
      }
    }
    ok &= emit(sink, tag.str() + " digit expansion", good);
  }

  // split(gamma + p^l beta) is a bijection at every level
  {
    bool good = true;
    for (unsigned level = 0; level <= n; ++level) {
      const auto lows = gr->residue_system(level, cap);
      const auto highs = gr->residue_system(n - level, cap);
      std::set<std::vector<std::uint64_t>> seen;
      const std::uint64_t p_level = checked_pow(p, level);
      for (const auto& lo : lows) {
        for (const auto& hi : highs) {
          const GrElement sum = gr->add(lo, gr->scalar_mul(hi, p_level));
          seen.insert(sum.coeffs());
          const auto [glo, ghi] = gr->split_at(sum, level);
          good = good && glo == lo && ghi == hi;
        }
      }
      good = good && seen.size() == total;
    }
    ok &= emit(sink, tag.str() + " split uniqueness", good);
  }

  // the Teichmüller section is multiplicative on units
  {
    std::vector<GrElement> units;
    std::vector<GrElement> lifts;
    for (const auto& a : elements) {
      if (a.is_unit()) units.push_back(a);
    }
    lifts.reserve(total);
    for (const auto& a : elements) lifts.push_back(gr->teichmuller_lift(a));
    bool good = true;
    for (const auto& a : units) {
      for (const auto& b : units) {
        const GrElement prod = gr->mul(a, b);
        const GrElement expect =
            gr->mul(lifts[gr->element_rank(a)], lifts[gr->element_rank(b)]);
        if (lifts[gr->element_rank(prod)] != expect) {
          good = false;
          break;
        }
      }
      if (!good) break;
    }
    ok &= emit(sink, tag.str() + " unit decomposition homomorphism", good);
  }

  // Frobenius powers: automorphisms, composition, fixed-point counts
  {
    bool good = true;
    std::vector<std::vector<std::uint32_t>> images(r);
    std::vector<std::vector<GrElement>> image_elems(r);
    for (unsigned j = 0; j < r; ++j) {
      images[j].resize(total);
      image_elems[j].reserve(total);
      for (std::uint64_t k = 0; k < total; ++k) {
        GrElement img = gr->frobenius(elements[k], j);
        images[j][k] = static_cast<std::uint32_t>(gr->element_rank(img));
        image_elems[j].push_back(std::move(img));
      }
    }
    for (std::uint64_t k = 0; k < total && good; ++k) {
      good = images[0][k] == k;  // sigma^0 is the identity
    }
    for (std::uint64_t x = 0; x < total && good; ++x) {
      for (std::uint64_t y = x; y < total && good; ++y) {
        const std::uint64_t sum_rank =
            gr->element_rank(gr->add(elements[x], elements[y]));
        const std::uint64_t prod_rank =
            gr->element_rank(gr->mul(elements[x], elements[y]));
        for (unsigned j = 1; j < r; ++j) {
          if (images[j][sum_rank] !=
                  gr->element_rank(
                      gr->add(image_elems[j][x], image_elems[j][y])) ||
              images[j][prod_rank] !=
                  gr->element_rank(
                      gr->mul(image_elems[j][x], image_elems[j][y]))) {
            good = false;
            break;
          }
        }
      }
    }
    // composition
    for (unsigned j = 0; j < r && good; ++j) {
      for (unsigned k = 0; k < r && good; ++k) {
        for (std::uint64_t x = 0; x < total; ++x) {
          if (images[(j + k) % r][x] != images[j][images[k][x]]) {
            good = false;
            break;
          }
        }
      }
    }
    // fixed Teichmüller points of sigma^j number p^gcd(r,j)
    for (unsigned j = 0; j < r && good; ++j) {
      std::uint64_t fixed = 0;
      for (const auto& g : gr->teichmuller_set(cap)) {
        if (gr->frobenius(g, j) == g) ++fixed;
      }
      const unsigned rj = j == 0 ? r : static_cast<unsigned>(std::gcd(r, j));
      good = good && fixed == checked_pow(p, rj);
    }
    ok &= emit(sink, tag.str() + " Frobenius suite", good);
  }

  // one-unit group: size, exponent, power images, invariants
  {
    std::vector<GrElement> one_units;
    for (const auto& a : elements) {
      if (gr->sub(a, gr->one()).p_valuation() >= 1) one_units.push_back(a);
    }
    bool good =
        one_units.size() ==
        checked_pow(p, static_cast<std::uint64_t>(r) * (n - 1));
    if (p != 2 || n <= 2) {
      for (unsigned i = 0; i <= n && good; ++i) {
        const unsigned level = gr->one_unit_power_image(i).level;
        std::set<std::vector<std::uint64_t>> image;
        const std::uint64_t exp = checked_pow(p, i);
        for (const auto& w : one_units) {
          image.insert(gr->pow(w, exp).coeffs());
        }
        std::set<std::vector<std::uint64_t>> expected;
        const std::uint64_t p_level = checked_pow(p, level);
        for (const auto& beta : gr->residue_system(n - level, cap)) {
          expected.insert(
              gr->add(gr->one(), gr->scalar_mul(beta, p_level)).coeffs());
        }
        good = good && image == expected;
      }
    }
    if (p != 2 && n >= 2) {
      const std::uint64_t exp = checked_pow(p, n - 1);
      for (const auto& w : one_units) {
        good = good && gr->pow(w, exp) == gr->one();
      }
      const auto inv = oracle::abelian_invariants(one_units);
      std::vector<std::uint64_t> expected(r, checked_pow(p, n - 1));
      good = good && inv == expected;
    }
    if (p == 2 && n >= 3) {
      const auto inv = oracle::abelian_invariants(one_units);
      std::vector<std::uint64_t> expected;
      expected.push_back(2);
      expected.push_back(checked_pow(2, n - 2));
      for (unsigned i = 1; i < r; ++i) {
        expected.push_back(checked_pow(2, n - 1));
      }
      std::sort(expected.begin(), expected.end());
      good = good && inv == expected;
    }
    ok &= emit(sink, tag.str() + " one-unit group", good);
  }
  return ok;
}

}  // namespace

bool check_structure_sweep(const Sink& sink, const Caps& caps) {
  bool ok = true;
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    for (unsigned r = 1; pow_at_most(p, r, caps.oracle); ++r) {
      for (unsigned n = 1;
           pow_at_most(p, static_cast<std::uint64_t>(r) * n, caps.oracle);
           ++n) {
        ok &= structure_suite_one(sink, p, n, r, caps.oracle);
      }
    }
  }
  return ok;
}

bool check_arithmetic_spot(const Sink& sink, std::uint64_t seed,
                           const Caps& caps) {
  bool ok = true;
  const std::vector<GeParams> tuples = {
      GeParams::make(3, 2, 1, 2, 3), GeParams::make(3, 2, 1, 3, 4),
      GeParams::make(2, 3, 1, 2, 5), GeParams::make(3, 2, 2, 2, 3),
      GeParams::make(5, 2, 1, 2, 4)};
  std::mt19937_64 rng(seed);
  for (const GeParams& params : tuples) {
    auto ring = GeRing::make(
        params, std::vector<std::uint64_t>(params.r, 1));  // u = 1
    const auto table = oracle::materialize(ring, caps.oracle);
    const std::uint64_t total = ring->size_u64();
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    bool good = true;
    for (int it = 0; it < 200 && good; ++it) {
      const GeElement a = ring->element_at(pick(rng));
      const GeElement b = ring->element_at(pick(rng));
      const GeElement c = ring->element_at(pick(rng));
      good = good &&
             ring->element_rank(ring->mul(a, b)) ==
                 table.mul(static_cast<std::uint32_t>(ring->element_rank(a)),
                           static_cast<std::uint32_t>(ring->element_rank(b)));
      good = good && ring->mul(ring->mul(a, b), c) ==
                         ring->mul(a, ring->mul(b, c));
      good = good && ring->mul(a, ring->add(b, c)) ==
                         ring->add(ring->mul(a, b), ring->mul(a, c));
    }
    ok &= emit(sink, "arithmetic spot " + params_str(params), good);
  }
  return ok;
}

bool run_quick(const Sink& sink) { return check_regressions(sink); }

bool run_full(const Sink& sink, const Caps& caps, std::uint64_t seed) {
  bool ok = check_regressions(sink);
  ok &= check_arithmetic_spot(sink, seed, caps);
  ok &= check_structure_sweep(sink, caps);
  ok &= check_theorem_sweep(sink, caps);
  ok &= check_burnside_sweep(sink, caps);
  ok &= check_double_count_sweep(sink, caps);
  return ok;
}

}  // namespace chainring::selftest
