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

#include <nlohmann/json.hpp>

#include "chainring/classifier.hpp"
#include "chainring/oracle.hpp"

namespace chainring {

inline constexpr const char* kSchemaTag = "chainring/1";

// Polynomials serialize as arrays of coefficient integers, constant first.
nlohmann::json poly_to_json(const poly::Poly& f);
poly::Poly poly_from_json(const nlohmann::json& j);

// {"coeffs": [c0, ..., c_{r-1}]}
nlohmann::json element_to_json(const GrElement& a);

// {"coeffs": [[...], ...]} with e inner arrays
nlohmann::json ge_element_to_json(const GeElement& a);

// {"p", "n", "r", "e", "s", "u"}
nlohmann::json ge_context_to_json(const GeRing& ring);

nlohmann::json params_to_json(const GeParams& params);
GeParams params_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const nlohmann::json& j);

// one line of the findings stream:
// {"check": ..., "params": {...}, "status": "ok|mismatch|skipped", "witness": ...}
nlohmann::json finding_json(const std::string& check, const GeParams& params,
                            const std::string& status,
                            nlohmann::json witness = nullptr);

}  // namespace chainring
