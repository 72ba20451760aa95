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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rota/instance.hpp"
#include "rota/instance_io.hpp"
#include "rota/matroid.hpp"

using nlohmann::json;
using rota::ElementId;
using rota::Instance;
using rota::Matroid;

namespace {

Instance graphic_square_instance() {
  // K4 minus nothing: 4 vertices, rank 3; not expressible as n bases of a
  // rank-n matroid with ground n^2 unless we pick edges carefully. Use a
  // 3-regular layout: 9 edges over 4 vertices cannot all be forests, so use
  // a multigraph on 4 vertices whose edge set splits into 3 spanning trees.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {
      {0, 1}, {1, 2}, {2, 3},  // path tree
      {0, 2}, {1, 3}, {0, 1},  // tree: 0-2, 1-3, 0-1
      {0, 3}, {1, 2}, {0, 2},  // tree: 0-3, 1-2, 0-2
  };
  Instance inst{Matroid::graphic(4, edges),
                {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};
  inst.validate();
  return inst;
}

Instance partition_instance() {
  // Rank 2, ground 4, classes {0,1,0,1} each capacity 1; bases {0,1}, {2,3}.
  Instance inst{Matroid::partition({0, 1, 0, 1}, {1, 1}), {{0, 1}, {2, 3}}};
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("round trip preserves every representation") {
  const Instance linear = rota::random_instance(3, 5, 7);
  const Instance uniform = rota::uniform_instance(4);
  const Instance graphic = graphic_square_instance();
  const Instance partition = partition_instance();

  for (const Instance* inst : {&linear, &uniform, &graphic, &partition}) {
    const json j = rota::instance_to_json(*inst);
    const Instance back = rota::instance_from_json(j);
    const json j2 = rota::instance_to_json(back);
    CHECK(rota::canonical_dump(j) == rota::canonical_dump(j2));
    CHECK(rota::json_digest(j) == rota::json_digest(j2));
    CHECK(back.n() == inst->n());
    CHECK(back.matroid.kind() == inst->matroid.kind());
    CHECK(back.bases == inst->bases);
  }
}

TEST_CASE("canonical dumps are key-order independent") {
  const json a = {{"b", 1}, {"a", 2}};
  json b;
  b["a"] = 2;
  b["b"] = 1;
  CHECK(rota::canonical_dump(a) == rota::canonical_dump(b));
  CHECK(rota::canonical_dump(a) == "{\"a\":2,\"b\":1}");
  CHECK(rota::json_digest(a) == rota::json_digest(b));
}

TEST_CASE("digest is a stable function of content") {
  // FNV-1a 64 frozen oracles (offset 14695981039346656037, prime 1099511628211).
  CHECK(rota::fnv1a64("") == 14695981039346656037ULL);
  CHECK(rota::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(rota::fnv1a64("foobar") == 0x85944171f73967e8ULL);

  const json j = rota::instance_to_json(rota::uniform_instance(2));
  CHECK(rota::json_digest(j) == rota::json_digest(j));
  json changed = j;
  changed["n"] = 3;
  CHECK(rota::json_digest(changed) != rota::json_digest(j));
}

TEST_CASE("malformed documents are rejected with specific messages") {
  const json good = rota::instance_to_json(rota::uniform_instance(2));

  auto expect_reject = [](json j, const char* reason) {
    INFO(reason);
    CHECK_THROWS_AS(rota::instance_from_json(j), std::invalid_argument);
  };

  json missing_n = good;
  missing_n.erase("n");
  expect_reject(missing_n, "missing n");

  json bad_kind = good;
  bad_kind["matroid"]["kind"] = "mystery";
  expect_reject(bad_kind, "unknown kind");

  json bad_bases = good;
  bad_bases["bases"] = "nope";
  expect_reject(bad_bases, "bases not an array");

  json negative = good;
  negative["matroid"]["rank"] = -1;
  expect_reject(negative, "negative rank");

  json overlap = good;
  overlap["bases"][1][0] = overlap["bases"][0][0];
  expect_reject(overlap, "bases overlap");

  json not_object = json::array();
  expect_reject(not_object, "document not an object");

  // Error text names the document, so failures are traceable.
  try {
    rota::instance_from_json(missing_n);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("instance json") != std::string::npos);
  }
}

TEST_CASE("file helpers round trip and fail loudly") {
  const std::string path = "io_test_scratch.json";
  rota::write_text_file(path, "{\"x\": 1}\n");
  CHECK(rota::read_text_file(path) == "{\"x\": 1}\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(rota::read_text_file("definitely/not/a/file.json"), std::runtime_error);
}

TEST_CASE("report serializers emit the documented keys") {
  const json ext = rota::extraction_result_to_json(
      rota::extract_serial(rota::uniform_instance(4), rota::ExtractionParams{}));
  for (const char* key :
       {"transversals", "rounds_used", "per_round_successes", "shortfall", "alpha", "m"}) {
    INFO(key);
    CHECK(ext.contains(key));
  }

  rota::MCReport mc;
  mc.trials = 10;
  mc.failures = 2;
  mc.estimate = rota::BigRat(1, 5);
  mc.std_error = 0.1;
  mc.seed = 42;
  const json mcj = rota::mc_report_to_json(mc);
  CHECK(mcj["trials"] == 10);
  CHECK(mcj["failures"] == 2);
  CHECK(mcj["estimate"] == "1/5");
  CHECK(mcj["seed"] == 42);
}
