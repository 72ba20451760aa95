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

#include "rota/instance_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rota {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("instance json: " + msg);
}

unsigned long get_uint(const json& j, const char* key) {
  require(j.contains(key), std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  require(v.is_number_unsigned(), std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<unsigned long>();
}

std::vector<std::uint32_t> get_uint_array(const json& j, const char* key) {
  require(j.contains(key), std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  require(v.is_array(), std::string("field \"") + key + "\" must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const json& x : v) {
    require(x.is_number_unsigned(), std::string("field \"") + key +
                                        "\" must hold non-negative integers");
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

json matroid_to_json(const Matroid& m) {
  json j;
  switch (m.kind()) {
    case MatroidKind::kLinear: {
      const LinearRep& rep = m.linear_rep();
      j["kind"] = "linear";
      j["p"] = rep.p;
      j["rows"] = rep.rows;
      j["entries"] = rep.entries;
      break;
    }
    case MatroidKind::kGraphic: {
      const GraphicRep& rep = m.graphic_rep();
      j["kind"] = "graphic";
      j["vertices"] = rep.vertex_count;
      json edges = json::array();
      for (const auto& [u, v] : rep.edges) edges.push_back(json::array({u, v}));
      j["edges"] = std::move(edges);
      break;
    }
    case MatroidKind::kUniform: {
      const UniformRep& rep = m.uniform_rep();
      j["kind"] = "uniform";
      j["rank"] = rep.rank;
      j["ground"] = rep.ground;
      break;
    }
    case MatroidKind::kPartition: {
      const PartitionRep& rep = m.partition_rep();
      j["kind"] = "partition";
      j["classes"] = rep.class_of;
      j["capacities"] = rep.capacity;
      break;
    }
  }
  return j;
}

Matroid matroid_from_json(const json& j) {
  require(j.is_object(), "field \"matroid\" must be an object");
  require(j.contains("kind"), "matroid missing field \"kind\"");
  require(j.at("kind").is_string(), "matroid field \"kind\" must be a string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    const unsigned long p = get_uint(j, "p");
    const unsigned long rows = get_uint(j, "rows");
    return Matroid::linear(static_cast<std::uint32_t>(p), rows, get_uint_array(j, "entries"));
  }
  if (kind == "graphic") {
    const unsigned long vertices = get_uint(j, "vertices");
    require(j.contains("edges"), "graphic matroid missing field \"edges\"");
    const json& edges_json = j.at("edges");
    require(edges_json.is_array(), "graphic matroid field \"edges\" must be an array");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(edges_json.size());
    for (const json& e : edges_json) {
      require(e.is_array() && e.size() == 2 && e[0].is_number_unsigned() &&
                  e[1].is_number_unsigned(),
              "each edge must be a [u, v] pair of non-negative integers");
      edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
    }
    return Matroid::graphic(vertices, std::move(edges));
  }
  if (kind == "uniform") {
    return Matroid::uniform(get_uint(j, "rank"), get_uint(j, "ground"));
  }
  if (kind == "partition") {
    return Matroid::partition(get_uint_array(j, "classes"), get_uint_array(j, "capacities"));
  }
  throw std::invalid_argument("instance json: unknown matroid kind \"" + kind + "\"");
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j;
  j["n"] = inst.n();
  j["matroid"] = matroid_to_json(inst.matroid);
  j["bases"] = inst.bases;
  return j;
}

Instance instance_from_json(const json& j) {
  require(j.is_object(), "document must be an object");
  require(j.contains("n"), "missing field \"n\"");
  require(j.contains("matroid"), "missing field \"matroid\"");
  require(j.contains("bases"), "missing field \"bases\"");
  const unsigned long n = get_uint(j, "n");
  Matroid matroid = matroid_from_json(j.at("matroid"));
  const json& bases_json = j.at("bases");
  require(bases_json.is_array(), "field \"bases\" must be an array");
  require(bases_json.size() == n, "field \"bases\" must hold exactly n bases");
  std::vector<std::vector<ElementId>> bases;
  bases.reserve(bases_json.size());
  for (std::size_t i = 0; i < bases_json.size(); ++i) {
    require(bases_json[i].is_array(), "each basis must be an array");
    std::vector<ElementId> b;
    b.reserve(bases_json[i].size());
    for (const json& x : bases_json[i]) {
      require(x.is_number_unsigned(), "basis entries must be non-negative integers");
      b.push_back(x.get<ElementId>());
    }
    bases.push_back(std::move(b));
  }
  Instance inst{std::move(matroid), std::move(bases)};
  inst.validate();
  return inst;
}

std::string canonical_dump(const json& j) {
  // Object keys live in sorted order already; a no-indent dump is canonical.
  return j.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string json_digest(const json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(canonical_dump(j)));
  return buf;
}

json extraction_result_to_json(const ExtractionResult& r) {
  json j;
  j["alpha"] = r.alpha;
  j["m"] = r.m;
  j["columns"] = r.columns;
  j["rounds_used"] = r.rounds_used;
  j["per_round_successes"] = r.per_round_successes;
  j["shortfall"] = r.shortfall;
  j["vacuous"] = r.vacuous;
  json ts = json::array();
  for (const Transversal& t : r.transversals) {
    json pairs = json::array();
    for (const auto& [cls, e] : t.assignment) pairs.push_back(json::array({cls, e}));
    ts.push_back(std::move(pairs));
  }
  j["transversals"] = std::move(ts);
  return j;
}

json mc_report_to_json(const MCReport& r) {
  json j;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["estimate"] = r.estimate.fraction_string();
  j["estimate_decimal"] = r.estimate.decimal_string(30);
  j["std_error"] = r.std_error;
  j["seed"] = r.seed;
  return j;
}

json inequality_report_to_json(const InequalityReport& r) {
  json j;
  j["all_pass"] = r.all_pass;
  json checks = json::array();
  for (const InequalityCheck& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["status"] = c.status == CheckStatus::kPass
                       ? "pass"
                       : (c.status == CheckStatus::kFail ? "fail" : "inconclusive");
    cj["lower"] = c.lower;
    cj["upper"] = c.upper;
    cj["precision_bits"] = c.precision_bits;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

json rank_domination_to_json(const RankDominationReport& r) {
  json j;
  j["trials"] = r.trials;
  j["rank_ge_ik"] = r.rank_ge_ik;
  j["ik_lt_k"] = r.ik_lt_k;
  j["ik_histogram"] = r.ik_histogram;
  j["chi_square"] = r.chi_square;
  j["chi_bins"] = r.chi_bins;
  j["seed"] = r.seed;
  return j;
}

json coupling_trace_to_json(const CouplingTrace& t) {
  json j;
  j["n"] = t.n;
  j["k"] = t.k;
  j["alpha"] = t.alpha;
  j["seed"] = t.seed;
  j["full"] = t.full;
  j["independent_sizes"] = t.independent_sizes;
  j["sprime_union_sizes"] = t.sprime_union_sizes;
  j["final_independent"] = t.final_independent;
  j["s_union"] = t.s_union;
  json steps = json::array();
  if (t.full) {
    for (const CouplingStep& s : t.steps) {
      json sj;
      sj["s_prime"] = s.s_prime;
      sj["psi"] = s.psi;
      sj["b_prime"] = s.b_prime;
      sj["s"] = s.s;
      sj["independent"] = s.independent;
      steps.push_back(std::move(sj));
    }
  }
  j["steps"] = std::move(steps);
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error("read failed: " + path);
  return std::move(buf).str();
}

void write_text_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace rota
