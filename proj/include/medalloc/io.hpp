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

#ifndef MEDALLOC_IO_HPP_
#define MEDALLOC_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "medalloc/allocation.hpp"
#include "medalloc/job.hpp"
#include "medalloc/kvip.hpp"
#include "medalloc/mediator.hpp"

namespace medalloc {

// JSON schemas. Infinity is encoded as the string "inf" in money and utility
// fields; all other numbers are plain JSON numbers. Parse errors throw
// std::invalid_argument naming the offending field.
//
//   running time:  {"type": "even_split", "t1": 100}
//                  {"type": "power_law", "t1": 100, "t_inf": 0, "alpha": 0.5}
//                  {"type": "table", "values": [10, 6, 5, 5]}
//   utility:       {"type": "constant", "a": 3}
//                  {"type": "step_to_infinity", "K": 40}
//                  {"type": "piecewise_constant", "breakpoints": [[t, level], ...]}
//                  {"type": "impulse_train", "impulses": [[location, mass], ...]}
//   coi:           {"type": "linear_ktn", "k": 2}
//                  {"type": "constant", "K": 9}
//                  {"type": "grid", "samples": [[t, n, value], ...]}
//   job:           {"id": "J1", "rt": {...}, "utility": {...}}
//   kvip instance: {"W": 5, "Kprime": 7, "items": [[[w, v], ...], ...]}
//   ap instance:   {"MAXN": 3, "K": 11, "coi": {...}, "jobs": [...],
//                   "n_cap": 3}            (n_cap optional, defaults to MAXN)
//   scenario:      {"total_processors": 4, "rounds": 10,
//                   "controller": {"target_load": 0.9, "gain": 0.5, "k0": 1,
//                                  "k_min": 0.1, "k_max": 10},
//                   "coi": {...}, "K": 0, "arrivals": [[job, ...], ...]}

nlohmann::json running_time_to_json(const RunningTimeModel& rt);
RunningTimeModel running_time_from_json(const nlohmann::json& j);

nlohmann::json utility_to_json(const UtilityModel& u);
UtilityModel utility_from_json(const nlohmann::json& j);

nlohmann::json coi_to_json(const CoIModel& coi);
CoIModel coi_from_json(const nlohmann::json& j);

nlohmann::json job_to_json(const Job& job);
Job job_from_json(const nlohmann::json& j);

nlohmann::json kvip_to_json(const KvipInstance& inst);
KvipInstance kvip_from_json(const nlohmann::json& j);

nlohmann::json ap_to_json(const ApInstance& ap);
ApInstance ap_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const nlohmann::json& j);

// Round-trace CSV. Column order is part of the public contract.
extern const char kTraceCsvHeader[];
void write_trace_csv(std::ostream& os, const std::vector<RoundTrace>& traces);

// Locale-independent shortest representation at 9 significant digits.
std::string format_number(double v);

}  // namespace medalloc

#endif  // MEDALLOC_IO_HPP_
