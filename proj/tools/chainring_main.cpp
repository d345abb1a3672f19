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

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainring/oracle.hpp"
#include "chainring/selftest.hpp"
#include "chainring/serialize.hpp"

namespace {

using namespace chainring;
using nlohmann::json;

// exit codes: 0 ok, 1 validation error, 2 cap exceeded, 3 selftest failure
constexpr int kOk = 0;
constexpr int kValidationError = 1;
constexpr int kCapExceeded = 2;
constexpr int kSelftestFailure = 3;

struct GlobalOpts {
  bool json = false;
  bool oracle = false;
  std::uint64_t cap = 0;  // 0: library defaults
  std::uint64_t seed = 1;

  Caps caps() const {
    if (cap == 0) return Caps{};
    return Caps{cap, std::min<std::uint64_t>(cap, 65535)};
  }
};

std::string coeffs_str(const std::vector<std::uint64_t>& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  return os.str();
}

std::string poly_str(const poly::Poly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || f[i] != 1) os << f[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::vector<std::uint64_t> parse_unit_coeffs(const std::string& text,
                                             unsigned r,
                                             std::uint64_t modulus) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(item, &pos);
    if (pos != item.size()) throw InvalidParams("bad coefficient: " + item);
    if (v >= modulus) {
      throw InvalidParams("coefficient " + item + " not in [0, p^n)");
    }
    out.push_back(v);
  }
  if (out.size() != r) {
    throw InvalidParams("unit must have exactly r coefficients c0,c1,...");
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_ring_info(const GlobalOpts& g, std::uint64_t p, unsigned n,
                  unsigned r) {
  auto gr = GaloisRing::make(p, n, r);
  const Caps caps = g.caps();

  json teich = nullptr;
  try {
    json list = json::array();
    for (const auto& t : gr->teichmuller_set(caps.materialize)) {
      list.push_back(t.coeffs());
    }
    teich = std::move(list);
  } catch (const CapExceeded&) {
  }

  json invariants = nullptr;
  if (pow_at_most(p, static_cast<std::uint64_t>(r) * (n - 1),
                  caps.oracle)) {
    std::vector<GrElement> one_units;
    for (const auto& beta : gr->residue_system(n - 1, caps.oracle)) {
      one_units.push_back(gr->add(gr->one(), gr->scalar_mul(beta, p)));
    }
    invariants = oracle::abelian_invariants(one_units);
  }

  if (g.json) {
    print_json(json{{"schema", kSchemaTag},
                    {"command", "ring-info"},
                    {"p", p},
                    {"n", n},
                    {"r", r},
                    {"f", gr->defining_poly_mod_p()},
                    {"f_n", gr->defining_poly()},
                    {"xi", gr->xi().coeffs()},
                    {"teichmuller", teich},
                    {"aut_group_order", r},
                    {"unit_group_order", gr->unit_group_order().str()},
                    {"one_unit_invariants", invariants}});
    return kOk;
  }
  std::cout << "GR(" << gr->modulus() << ", " << r << ")  =  Z/" << p << "^"
            << n << "[x]/(f_n)\n";
  std::cout << "  f    (mod p)   : " << poly_str(gr->defining_poly_mod_p())
            << "\n";
  std::cout << "  f_n  (mod p^n) : " << poly_str(gr->defining_poly()) << "\n";
  std::cout << "  xi             : " << coeffs_str(gr->xi().coeffs()) << "\n";
  std::cout << "  |Aut|          : " << r << "\n";
  std::cout << "  |units|        : " << gr->unit_group_order().str() << "\n";
  if (!teich.is_null()) {
    std::cout << "  Teichmüller set (" << teich.size() << "):";
    for (const auto& t : teich) {
      std::cout << " (" << coeffs_str(t.get<std::vector<std::uint64_t>>())
                << ")";
    }
    std::cout << "\n";
  } else {
    std::cout << "  Teichmüller set: above cap\n";
  }
  if (!invariants.is_null()) {
    std::cout << "  1 + pGR invariant factors: [";
    bool first = true;
    for (const auto& d : invariants) {
      if (!first) std::cout << ", ";
      first = false;
      std::cout << d;
    }
    std::cout << "]\n";
  }
  return kOk;
}

int cmd_classify(const GlobalOpts& g, std::uint64_t p, unsigned n, unsigned r,
                 std::uint64_t e, std::uint64_t s) {
  const GeParams params = GeParams::make(p, n, r, e, s);
  const Caps caps = g.caps();
  const ClassificationReport report = classify(params, caps);

  json oracle_part = nullptr;
  if (g.oracle) {
    try {
      const auto classes = oracle::oracle_class_partition(params, caps);
      const bool agrees = BigInt(classes.size()) == report.count_formula;
      json reps = json::array();
      for (const auto& cls : classes) {
        reps.push_back(cls.representative.coeffs());
      }
      oracle_part = json{{"classes", classes.size()},
                         {"agrees", agrees},
                         {"representatives", std::move(reps)}};
    } catch (const CapExceeded&) {
      oracle_part = json{{"skipped", "ring above brute-force cap"}};
    }
  }

  if (g.json) {
    json out = report_to_json(report);
    out["schema"] = kSchemaTag;
    out["command"] = "classify";
    if (!oracle_part.is_null()) out["oracle"] = oracle_part;
    print_json(out);
    return kOk;
  }

  std::cout << "pure GE rings with (p,n,r,e,s) = (" << p << "," << params.n
            << "," << r << "," << e << "," << s << ")\n";
  std::cout << "  t = " << params.t() << ", omega = " << report.omega
            << ", flat = " << report.flat << ", partial = " << report.partial
            << ", d = " << report.d << "\n";
  std::cout << "  chi = (" << coeffs_str(report.chi) << "), eta = ("
            << coeffs_str(report.eta) << ")\n";
  std::cout << "  certified regime ((p-1) does not divide e): "
            << (report.hypothesis_ok ? "yes" : "no") << "\n";
  std::cout << "  classes (formula)    : " << report.count_formula.str()
            << "\n";
  if (report.count_enumerated) {
    std::cout << "  classes (enumerated) : " << *report.count_enumerated
              << "\n";
    std::cout << "  representatives      :";
    for (const auto& orbit : report.orbits) {
      std::cout << " (" << coeffs_str(orbit.rep) << ")";
    }
    std::cout << "\n";
  }
  for (const auto& note : report.notes) {
    std::cout << "  note: " << note << "\n";
  }
  if (!oracle_part.is_null()) {
    if (oracle_part.contains("skipped")) {
      std::cout << "  oracle: skipped (above cap)\n";
    } else {
      std::cout << "  oracle: " << oracle_part["classes"] << " classes ("
                << (oracle_part["agrees"].get<bool>() ? "agrees"
                                                      : "MISMATCH")
                << ")\n";
    }
  }
  return kOk;
}

int cmd_isomorphic(const GlobalOpts& g, std::uint64_t p, unsigned n,
                   unsigned r, std::uint64_t e, std::uint64_t s,
                   const std::string& u_text, const std::string& v_text) {
  const GeParams params = GeParams::make(p, n, r, e, s);
  const Caps caps = g.caps();
  auto gr = GaloisRing::make(params.p, params.n, params.r);
  const GrElement u =
      gr->from_coeffs(parse_unit_coeffs(u_text, params.r, gr->modulus()));
  const GrElement v =
      gr->from_coeffs(parse_unit_coeffs(v_text, params.r, gr->modulus()));
  if (!u.is_unit() || !v.is_unit()) {
    throw NotAUnit("u and v must be units of the coefficient ring");
  }

  const IsoVerdict verdict = ge_isomorphic(u, v, params, caps);

  json concurrence = nullptr;
  if (g.oracle) {
    try {
      const auto r1 = oracle::materialize(GeRing::make(gr, params, u),
                                          caps.oracle);
      const auto r2 = oracle::materialize(GeRing::make(gr, params, v),
                                          caps.oracle);
      const auto w = oracle::oracle_isomorphic(r1, r2);
      concurrence = json{{"isomorphic", w.has_value()},
                         {"agrees", w.has_value() == verdict.isomorphic}};
    } catch (const CapExceeded&) {
      concurrence = json{{"skipped", "ring above brute-force cap"}};
    }
  }

  if (g.json) {
    json out{{"schema", kSchemaTag},
             {"command", "isomorphic"},
             {"params", params_to_json(params)},
             {"u", u.coeffs()},
             {"v", v.coeffs()},
             {"isomorphic", verdict.isomorphic},
             {"witness_twist", verdict.frobenius_twist
                                   ? json(*verdict.frobenius_twist)
                                   : json(nullptr)},
             {"mode", verdict.mode == IsoVerdict::Mode::kTheorem
                          ? "theorem"
                          : "oracle"}};
    if (!concurrence.is_null()) out["oracle"] = concurrence;
    print_json(out);
    return kOk;
  }
  std::cout << (verdict.isomorphic ? "true" : "false");
  if (verdict.frobenius_twist) {
    std::cout << "  (Frobenius twist " << *verdict.frobenius_twist << ")";
  }
  std::cout << "  ["
            << (verdict.mode == IsoVerdict::Mode::kTheorem ? "theorem"
                                                           : "oracle")
            << " route]\n";
  if (!concurrence.is_null()) {
    if (concurrence.contains("skipped")) {
      std::cout << "oracle: skipped (above cap)\n";
    } else {
      std::cout << "oracle: "
                << (concurrence["isomorphic"].get<bool>() ? "true" : "false")
                << " ("
                << (concurrence["agrees"].get<bool>() ? "agrees" : "MISMATCH")
                << ")\n";
    }
  }
  return kOk;
}

struct Range {
  std::uint64_t lo = 0, hi = 0;
  bool is_auto = false;
};

Range parse_range(const std::string& text, bool allow_auto) {
  if (allow_auto && text == "auto") return {0, 0, true};
  Range out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.lo = out.hi = std::stoull(text);
  } else {
    out.lo = std::stoull(text.substr(0, dots));
    out.hi = std::stoull(text.substr(dots + 2));
  }
  if (out.lo > out.hi) throw InvalidParams("empty range: " + text);
  return out;
}

int cmd_census(const GlobalOpts& g, const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> kv;
  for (const auto& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw InvalidParams("census arguments are key=value, got: " + token);
    }
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"p", "n", "r", "e", "s"}) {
    if (!kv.count(key)) {
      throw InvalidParams(std::string("census requires ") + key + "=...");
    }
  }
  const Range pr = parse_range(kv["p"], false);
  const Range nr = parse_range(kv["n"], false);
  const Range rr = parse_range(kv["r"], false);
  const Range er = parse_range(kv["e"], false);
  const Range sr = parse_range(kv["s"], true);
  const Caps caps = g.caps();

  json rows = json::array();
  for (std::uint64_t p = pr.lo; p <= pr.hi; ++p) {
    if (!is_prime(p)) {
      if (pr.lo == pr.hi) throw InvalidParams("p must be prime");
      continue;
    }
    for (std::uint64_t n = nr.lo; n <= nr.hi; ++n) {
      for (std::uint64_t r = rr.lo; r <= rr.hi; ++r) {
        for (std::uint64_t e = er.lo; e <= er.hi; ++e) {
          const std::uint64_t s_lo = sr.is_auto ? (n - 1) * e + 1 : sr.lo;
          const std::uint64_t s_hi = sr.is_auto ? n * e : sr.hi;
          for (std::uint64_t s = s_lo; s <= s_hi; ++s) {
            GeParams params;
            try {
              params = GeParams::make(p, static_cast<unsigned>(n),
                                      static_cast<unsigned>(r), e, s);
            } catch (const InvalidParams&) {
              continue;
            }
            const FlatResult flat = compute_flat(params);
            const BigInt d = gcd(big_pow(p, r) - 1, BigInt(e));
            const BigInt ur_size =
                d * big_pow(p, r * std::uint64_t(flat.partial - 1));
            json row{{"p", params.p},
                     {"n", params.n},
                     {"r", params.r},
                     {"e", params.e},
                     {"s", params.s},
                     {"t", params.t()},
                     {"omega", flat.omega},
                     {"flat", flat.flat},
                     {"partial", flat.partial},
                     {"d", d.str()},
                     {"ur_size", ur_size.str()},
                     {"hypothesis_ok", flat.hypothesis_ok},
                     {"count", count_formula(params).str()}};
            if (g.oracle) {
              try {
                row["count_oracle"] =
                    oracle::oracle_class_partition(params, caps).size();
              } catch (const CapExceeded&) {
                row["count_oracle"] = nullptr;
              }
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  if (rows.empty()) throw InvalidParams("empty census range");

  if (g.json) {
    print_json(json{{"schema", kSchemaTag},
                    {"command", "census"},
                    {"rows", rows}});
    return kOk;
  }
  std::cout << "p,n,r,e,s,t,omega,flat,partial,d,ur_size,hypothesis_ok,count";
  if (g.oracle) std::cout << ",count_oracle";
  std::cout << "\n";
  for (const auto& row : rows) {
    std::cout << row["p"] << "," << row["n"] << "," << row["r"] << ","
              << row["e"] << "," << row["s"] << "," << row["t"] << ","
              << row["omega"] << "," << row["flat"] << "," << row["partial"]
              << "," << row["d"].get<std::string>() << ","
              << row["ur_size"].get<std::string>() << ","
              << (row["hypothesis_ok"].get<bool>() ? "true" : "false") << ","
              << row["count"].get<std::string>();
    if (g.oracle) {
      std::cout << ",";
      if (!row["count_oracle"].is_null()) std::cout << row["count_oracle"];
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_selftest(const GlobalOpts& g, const std::string& level) {
  if (level != "quick" && level != "full") {
    throw InvalidParams("selftest level must be quick or full");
  }
  std::vector<selftest::CheckResult> results;
  const selftest::Sink sink = [&](const selftest::CheckResult& res) {
    results.push_back(res);
    if (!g.json) {
      const char* label = res.status == selftest::Status::kPass      ? "PASS"
                          : res.status == selftest::Status::kFail    ? "FAIL"
                          : res.status == selftest::Status::kFinding ? "FINDING"
                                                                     : "SKIP";
      std::cout << "[" << label << "] " << res.name;
      if (!res.detail.empty()) std::cout << "  " << res.detail;
      std::cout << "\n";
    }
  };
  const bool ok = level == "quick"
                      ? selftest::run_quick(sink)
                      : selftest::run_full(sink, g.caps(), g.seed);
  std::size_t failures = 0, findings = 0;
  for (const auto& res : results) {
    failures += res.status == selftest::Status::kFail;
    findings += res.status == selftest::Status::kFinding;
  }
  if (g.json) {
    json items = json::array();
    for (const auto& res : results) {
      const char* status = res.status == selftest::Status::kPass ? "pass"
                           : res.status == selftest::Status::kFail
                               ? "fail"
                           : res.status == selftest::Status::kFinding
                               ? "finding"
                               : "skipped";
      items.push_back(json{{"name", res.name},
                           {"status", status},
                           {"detail", res.detail}});
    }
    print_json(json{{"schema", kSchemaTag},
                    {"command", "selftest"},
                    {"level", level},
                    {"results", items},
                    {"failures", failures},
                    {"findings", findings}});
  } else {
    std::cout << results.size() << " checks, " << failures << " failures, "
              << findings << " findings\n";
  }
  return ok ? kOk : kSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chainring: exact arithmetic and isomorphism classification for "
      "Galois rings and pure Galois-Eisenstein chain rings"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json, "emit JSON instead of human-readable text");
  app.add_flag("--oracle", g.oracle,
               "cross-check with the brute-force engine where feasible");
  app.add_option("--cap", g.cap,
                 "materialization cap in elements (default 65536; also "
                 "bounds the brute-force tables, default 4096)")
      ->envname("CHAINRING_CAP");
  app.add_option("--seed", g.seed, "seed for randomized property sampling");

  std::uint64_t p = 0, e = 0, s = 0;
  unsigned n = 0, r = 0;
  std::string u_text, v_text, level;
  std::vector<std::string> census_tokens;

  auto* ring_info = app.add_subcommand("ring-info", "describe GR(p^n, r)");
  ring_info->add_option("p", p)->required();
  ring_info->add_option("n", n)->required();
  ring_info->add_option("r", r)->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "classify pure GE rings with parameters (p, n, r, e, s)");
  classify_cmd->add_option("p", p)->required();
  classify_cmd->add_option("n", n)->required();
  classify_cmd->add_option("r", r)->required();
  classify_cmd->add_option("e", e)->required();
  classify_cmd->add_option("s", s)->required();

  auto* iso = app.add_subcommand(
      "isomorphic", "decide GE(u) ≅ GE(v); u, v as coefficients c0,c1,...");
  iso->add_option("p", p)->required();
  iso->add_option("n", n)->required();
  iso->add_option("r", r)->required();
  iso->add_option("e", e)->required();
  iso->add_option("s", s)->required();
  iso->add_option("u", u_text)->required();
  iso->add_option("v", v_text)->required();

  auto* census = app.add_subcommand(
      "census", "counts over ranges: p=3 n=2 r=1 e=2..4 s=auto");
  census->add_option("ranges", census_tokens, "key=value tokens")
      ->required()
      ->expected(-1);

  auto* selftest_cmd =
      app.add_subcommand("selftest", "run built-in verification checks");
  selftest_cmd->add_option("level", level, "quick|full")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ring_info->parsed()) return cmd_ring_info(g, p, n, r);
    if (classify_cmd->parsed()) return cmd_classify(g, p, n, r, e, s);
    if (iso->parsed()) return cmd_isomorphic(g, p, n, r, e, s, u_text, v_text);
    if (census->parsed()) return cmd_census(g, census_tokens);
    if (selftest_cmd->parsed()) return cmd_selftest(g, level);
  } catch (const CapExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kValidationError;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kValidationError;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kValidationError;
  }
  return kOk;
}
