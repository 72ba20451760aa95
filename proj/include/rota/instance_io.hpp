// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rota/coupling.hpp"
#include "rota/extractor.hpp"
#include "rota/instance.hpp"
#include "rota/probability.hpp"

namespace rota {

// Instance wire format:
//   {"n": int,
//    "matroid": {"kind": "linear", "p": int, "rows": int, "entries": [int...]}
//             | {"kind": "graphic", "vertices": int, "edges": [[u,v]...]}
//             | {"kind": "uniform", "rank": int, "ground": int}
//             | {"kind": "partition", "classes": [int...], "capacities": [int...]},
//    "bases": [[int...]...]}
// Linear entries are row-major. Loading validates every invariant and throws
// std::invalid_argument naming the first violated one.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

// Key-sorted, whitespace-free rendering; equal documents always produce
// byte-identical strings.
std::string canonical_dump(const nlohmann::json& j);

// FNV-1a 64-bit digest of a canonical dump, as 16 hex digits.
std::uint64_t fnv1a64(std::string_view bytes);
std::string json_digest(const nlohmann::json& j);

nlohmann::json extraction_result_to_json(const ExtractionResult& r);
nlohmann::json mc_report_to_json(const MCReport& r);
nlohmann::json inequality_report_to_json(const InequalityReport& r);
nlohmann::json rank_domination_to_json(const RankDominationReport& r);
nlohmann::json coupling_trace_to_json(const CouplingTrace& t);

// Whole-file helpers; failures throw std::runtime_error carrying the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

}  // namespace rota
