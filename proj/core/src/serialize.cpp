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

#include "chainring/serialize.hpp"

namespace chainring {

using nlohmann::json;

json poly_to_json(const poly::Poly& f) { return json(f); }

poly::Poly poly_from_json(const json& j) {
  return j.get<poly::Poly>();
}

json element_to_json(const GrElement& a) {
  return json{{"coeffs", a.coeffs()}};
}

json ge_element_to_json(const GeElement& a) {
  json coeffs = json::array();
  for (const auto& slot : a.slots()) coeffs.push_back(slot.coeffs());
  return json{{"coeffs", std::move(coeffs)}};
}

json ge_context_to_json(const GeRing& ring) {
  const GeParams& P = ring.params();
  return json{{"p", P.p},   {"n", P.n}, {"r", P.r}, {"e", P.e},
              {"s", P.s}, {"u", ring.defining_unit().coeffs()}};
}

json params_to_json(const GeParams& params) {
  return json{{"p", params.p}, {"n", params.n}, {"r", params.r},
              {"e", params.e}, {"s", params.s}, {"t", params.t()}};
}

GeParams params_from_json(const json& j) {
  return GeParams::make(j.at("p").get<std::uint64_t>(),
                        j.at("n").get<unsigned>(), j.at("r").get<unsigned>(),
                        j.at("e").get<std::uint64_t>(),
                        j.at("s").get<std::uint64_t>());
}

json report_to_json(const ClassificationReport& report) {
  json orbits = json::array();
  for (const auto& orbit : report.orbits) {
    orbits.push_back(json{{"rep", orbit.rep}, {"members", orbit.members}});
  }
  json enumerated = nullptr;
  if (report.count_enumerated) enumerated = *report.count_enumerated;
  return json{{"params", params_to_json(report.params)},
              {"omega", report.omega},
              {"flat", report.flat},
              {"partial", report.partial},
              {"d", report.d},
              {"chi", report.chi},
              {"eta", report.eta},
              {"hypothesis_ok", report.hypothesis_ok},
              {"count_formula", report.count_formula.str()},
              {"count_enumerated", enumerated},
              {"orbits", std::move(orbits)},
              {"notes", report.notes}};
}

ClassificationReport report_from_json(const json& j) {
  ClassificationReport out;
  out.params = params_from_json(j.at("params"));
  out.omega = j.at("omega").get<unsigned>();
  out.flat = j.at("flat").get<unsigned>();
  out.partial = j.at("partial").get<unsigned>();
  out.d = j.at("d").get<std::uint64_t>();
  out.chi = j.at("chi").get<std::vector<std::uint64_t>>();
  out.eta = j.at("eta").get<std::vector<std::uint64_t>>();
  out.hypothesis_ok = j.at("hypothesis_ok").get<bool>();
  out.count_formula = BigInt(j.at("count_formula").get<std::string>());
  if (!j.at("count_enumerated").is_null()) {
    out.count_enumerated = j.at("count_enumerated").get<std::uint64_t>();
  }
  for (const auto& orbit : j.at("orbits")) {
    OrbitData data;
    data.rep = orbit.at("rep").get<std::vector<std::uint64_t>>();
    data.members =
        orbit.at("members").get<std::vector<std::vector<std::uint64_t>>>();
    out.orbits.push_back(std::move(data));
  }
  out.notes = j.at("notes").get<std::vector<std::string>>();
  return out;
}

json finding_json(const std::string& check, const GeParams& params,
                  const std::string& status, json witness) {
  return json{{"check", check},
              {"params", params_to_json(params)},
              {"status", status},
              {"witness", std::move(witness)}};
}

}  // namespace chainring
