// Copyright 2026 The Medalloc Authors
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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "medalloc/cli.hpp"
#include "medalloc/io.hpp"
#include "support/generators.hpp"

using namespace medalloc;
using nlohmann::json;

namespace {

// Writes content to a unique temp path; removed by the caller.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = "medalloc_test_" + std::to_string(counter++) + ".json";
    std::ofstream out(path_);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  if (out_text != nullptr) *out_text = out.str();
  if (err_text != nullptr) *err_text = err.str();
  return status;
}

}  // namespace

TEST_CASE("model serialization round-trips") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Job job = testsupport::random_job(rng, "J");
    const json first = job_to_json(job);
    const json second = job_to_json(job_from_json(first));
    CHECK(first == second);
  }
}

TEST_CASE("grid pricing serializes infinities as \"inf\"") {
  const CoIModel g =
      CoIModel::grid({{5.0, 2, ExtMoney(3.0)}, {6.0, 2, ExtMoney::inf()}});
  const json j = coi_to_json(g);
  CHECK(j["samples"][1][2] == "inf");
  const CoIModel back = coi_from_json(j);
  CHECK(back.samples()[1].value.is_inf());
  CHECK(coi_to_json(back) == j);
}

TEST_CASE("kvip files use the W/Kprime/items schema") {
  const json j = json::parse(R"({
    "W": 5, "Kprime": 7,
    "items": [[[2, 3], [4, 5]], [[3, 4]]]
  })");
  const KvipInstance inst = kvip_from_json(j);
  CHECK(inst.capacity == 5);
  CHECK(inst.target == 7.0);
  REQUIRE(inst.items.size() == 2);
  CHECK(inst.items[0].versions == std::vector<KvipVersion>{{2, 3.0}, {4, 5.0}});
  CHECK(kvip_to_json(inst) == j);

  CHECK_THROWS_WITH_AS(kvip_from_json(json::parse(R"({"Kprime": 1, "items": []})")),
                       "kvip instance: missing field \"W\"",
                       std::invalid_argument);
}

TEST_CASE("scenario files round-trip through JSON") {
  std::mt19937_64 rng(67);
  Scenario s{6, 3, PricingController{0.85, 0.4, 1.2, 0.3, 9.0},
             CoIModel::linear_ktn(1.5), 2.0, {}};
  s.arrivals.push_back({testsupport::random_job(rng, "A")});
  s.arrivals.push_back({});
  s.arrivals.push_back(
      {testsupport::random_job(rng, "B"), testsupport::random_job(rng, "C")});
  const json j = scenario_to_json(s);
  CHECK(scenario_to_json(scenario_from_json(j)) == j);

  json missing = j;
  missing.erase("controller");
  CHECK_THROWS_WITH_AS(scenario_from_json(missing),
                       "scenario: missing field \"controller\"",
                       std::invalid_argument);
}

TEST_CASE("ap instances round-trip and default their cap") {
  const json j = json::parse(R"({
    "MAXN": 3, "K": 11,
    "coi": {"type": "linear_ktn", "k": 1},
    "jobs": [{"id": "A",
              "rt": {"type": "table", "values": [4, 3]},
              "utility": {"type": "constant", "a": 50}}]
  })");
  const ApInstance ap = ap_from_json(j);
  CHECK(ap.n_cap == 3);
  CHECK(ap_from_json(ap_to_json(ap)).n_cap == 3);
}

TEST_CASE("number formatting is stable at nine significant digits") {
  CHECK(format_number(200.0) == "200");
  CHECK(format_number(0.25) == "0.25");
  CHECK(format_number(632.455532) == "632.455532");
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
}

TEST_CASE("the examples command reports PASS everywhere") {
  std::string out;
  CHECK(run({"examples"}, &out) == 0);
  CHECK(out.find("FAIL") == std::string::npos);
  // One PASS per fixture at minimum.
  std::size_t count = 0;
  for (std::size_t pos = out.find("PASS"); pos != std::string::npos;
       pos = out.find("PASS", pos + 1)) {
    ++count;
  }
  CHECK(count >= 4);
  CHECK(out.find("all examples PASS") != std::string::npos);
}

TEST_CASE("the kvip command solves a file instance") {
  const TempFile file(R"({"W": 5, "Kprime": 7,
                          "items": [[[2, 3], [4, 5]], [[3, 4]]]})");
  std::string out;
  CHECK(run({"kvip", "--file", file.path()}, &out) == 0);
  CHECK(out.find("value=7") != std::string::npos);
  CHECK(out.find("decision: yes") != std::string::npos);
  CHECK(out.find("item 1: version 1") != std::string::npos);

  std::string brute_out;
  CHECK(run({"kvip", "--file", file.path(), "--brute"}, &brute_out) == 0);
  CHECK(brute_out == out);
}

TEST_CASE("the kvip command generates, emits, and re-reads instances") {
  const std::string emitted = "medalloc_test_emit.json";
  std::string out;
  CHECK(run({"kvip", "--random", "--seed", "7", "--emit", emitted}, &out) == 0);
  std::ifstream in(emitted);
  REQUIRE(in.good());
  const KvipInstance inst = kvip_from_json(json::parse(in));
  CHECK(!inst.items.empty());
  std::string reread;
  CHECK(run({"kvip", "--file", emitted}, &reread) == 0);
  CHECK(reread == out);
  std::remove(emitted.c_str());
}

TEST_CASE("the nstar command prints the optimal set") {
  const TempFile file(R"({
    "job": {"id": "J2",
            "rt": {"type": "power_law", "t1": 100, "t_inf": 0, "alpha": 0.5},
            "utility": {"type": "step_to_infinity", "K": 40}},
    "coi": {"type": "linear_ktn", "k": 1},
    "n_cap": 20
  })");
  std::string out;
  CHECK(run({"nstar", "--file", file.path()}, &out) == 0);
  CHECK(out == "{0..7}\n");

  std::string capped;
  CHECK(run({"nstar", "--file", file.path(), "--cap", "5"}, &capped) == 0);
  CHECK(capped == "{0..5}\n");
}

TEST_CASE("the solve command prints grants and revenue") {
  const TempFile file(R"({
    "MAXN": 3, "K": 11,
    "coi": {"type": "linear_ktn", "k": 1},
    "jobs": [
      {"id": "A", "rt": {"type": "table", "values": [4, 3]},
       "utility": {"type": "constant", "a": 50}},
      {"id": "B", "rt": {"type": "table", "values": [5]},
       "utility": {"type": "constant", "a": 50}}
    ]
  })");
  std::string out;
  CHECK(run({"solve", "--file", file.path()}, &out) == 0);
  CHECK(out.find("job A: 2 processors") != std::string::npos);
  CHECK(out.find("revenue=11") != std::string::npos);
  CHECK(out.find("decision: yes") != std::string::npos);

  std::string csv;
  CHECK(run({"--output", "csv", "solve", "--file", file.path()}, &csv) == 0);
  CHECK(csv.find("job_id,granted_n,running_time,cost") != std::string::npos);
  CHECK(csv.find("A,2,3,6") != std::string::npos);
}

TEST_CASE("the simulate command emits the trace schema") {
  const TempFile file(R"({
    "total_processors": 4, "rounds": 3,
    "controller": {"target_load": 0.9, "gain": 0.5,
                   "k0": 1, "k_min": 0.1, "k_max": 10},
    "coi": {"type": "linear_ktn", "k": 2},
    "arrivals": [[{"id": "J1", "rt": {"type": "even_split", "t1": 3},
                   "utility": {"type": "constant", "a": 1}}]]
  })");
  std::string out;
  CHECK(run({"simulate", "--file", file.path()}, &out) == 0);
  CHECK(out.rfind("round,job_id,granted_n,running_time,cost,load_factor,"
                  "k_before,k_after\n", 0) == 0);
  CHECK(out.find("0,J1,1,3,6,0.25,1,") != std::string::npos);
}

TEST_CASE("bad inputs exit 1 with a named field") {
  const TempFile file(R"({"W": 5, "items": []})");
  std::string err;
  CHECK(run({"kvip", "--file", file.path()}, nullptr, &err) == 1);
  CHECK(err.find("Kprime") != std::string::npos);

  CHECK(run({"nstar", "--file", "no_such_file.json"}, nullptr, &err) == 1);
  CHECK(err.find("no_such_file.json") != std::string::npos);

  const TempFile garbage("{not json");
  CHECK(run({"kvip", "--file", garbage.path()}, nullptr, &err) == 1);
}

TEST_CASE("usage errors exit 2") {
  std::string err;
  CHECK(run({"frobnicate"}, nullptr, &err) == 2);
  CHECK(run({}, nullptr, &err) == 2);
  CHECK(run({"nstar"}, nullptr, &err) == 2);  // missing required --file
  CHECK(run({"examples", "--bogus-flag"}, nullptr, &err) == 2);
}
