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

#include "medalloc/io.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace medalloc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& what) {
  throw std::invalid_argument(context + ": " + what);
}

const json& require(const json& j, const char* field, const std::string& context) {
  if (!j.is_object() || !j.contains(field)) {
    fail(context, std::string("missing field \"") + field + "\"");
  }
  return j.at(field);
}

double require_number(const json& j, const char* field, const std::string& context) {
  const json& v = require(j, field, context);
  if (!v.is_number()) {
    fail(context, std::string("field \"") + field + "\" must be a number");
  }
  return v.get<double>();
}

int require_int(const json& j, const char* field, const std::string& context) {
  const json& v = require(j, field, context);
  if (!v.is_number_integer()) {
    fail(context, std::string("field \"") + field + "\" must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const json& j, const char* field,
                           const std::string& context) {
  const json& v = require(j, field, context);
  if (!v.is_string()) {
    fail(context, std::string("field \"") + field + "\" must be a string");
  }
  return v.get<std::string>();
}

// Money and utility values admit the string "inf"; JSON itself has no
// infinity literal.
json money_to_json(const ExtMoney& m) {
  if (m.is_inf()) return json("inf");
  return json(m.amount());
}

ExtMoney money_from_json(const json& v, const std::string& context) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return ExtMoney::inf();
    fail(context, "money strings must be \"inf\"");
  }
  if (!v.is_number()) fail(context, "money must be a number or \"inf\"");
  return ExtMoney(v.get<double>());
}

}  // namespace

json running_time_to_json(const RunningTimeModel& rt) {
  switch (rt.kind()) {
    case RunningTimeModel::Kind::kEvenSplit:
      return {{"type", "even_split"}, {"t1", rt.t1()}};
    case RunningTimeModel::Kind::kPowerLaw:
      return {{"type", "power_law"},
              {"t1", rt.t1()},
              {"t_inf", rt.t_inf()},
              {"alpha", rt.alpha()}};
    case RunningTimeModel::Kind::kTable:
    default:
      return {{"type", "table"}, {"values", rt.values()}};
  }
}

RunningTimeModel running_time_from_json(const json& j) {
  const std::string context = "running time";
  const std::string type = require_string(j, "type", context);
  if (type == "even_split") {
    return RunningTimeModel::even_split(require_number(j, "t1", context));
  }
  if (type == "power_law") {
    return RunningTimeModel::power_law(require_number(j, "t1", context),
                                       require_number(j, "t_inf", context),
                                       require_number(j, "alpha", context));
  }
  if (type == "table") {
    const json& values = require(j, "values", context);
    if (!values.is_array() || values.empty()) {
      fail(context, "field \"values\" must be a non-empty array");
    }
    return RunningTimeModel::table(values.get<std::vector<double>>());
  }
  fail(context, "unknown type \"" + type + "\"");
}

json utility_to_json(const UtilityModel& u) {
  switch (u.kind()) {
    case UtilityModel::Kind::kConstant:
      return {{"type", "constant"}, {"a", u.constant_level()}};
    case UtilityModel::Kind::kStepToInfinity:
      return {{"type", "step_to_infinity"}, {"K", u.step_threshold()}};
    case UtilityModel::Kind::kPiecewiseConstant: {
      json points = json::array();
      for (const auto& bp : u.breakpoints()) {
        points.push_back({bp.t_start, bp.level});
      }
      return {{"type", "piecewise_constant"}, {"breakpoints", points}};
    }
    case UtilityModel::Kind::kImpulseTrain:
    default: {
      json points = json::array();
      for (const auto& imp : u.impulses()) {
        points.push_back({imp.location, imp.mass});
      }
      return {{"type", "impulse_train"}, {"impulses", points}};
    }
  }
}

UtilityModel utility_from_json(const json& j) {
  const std::string context = "utility";
  const std::string type = require_string(j, "type", context);
  if (type == "constant") {
    return UtilityModel::constant(require_number(j, "a", context));
  }
  if (type == "step_to_infinity") {
    return UtilityModel::step_to_infinity(require_number(j, "K", context));
  }
  if (type == "piecewise_constant") {
    const json& points = require(j, "breakpoints", context);
    if (!points.is_array()) fail(context, "\"breakpoints\" must be an array");
    std::vector<UtilityBreakpoint> breakpoints;
    for (const json& p : points) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        fail(context, "breakpoints must be [t_start, level] pairs");
      }
      breakpoints.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return UtilityModel::piecewise_constant(std::move(breakpoints));
  }
  if (type == "impulse_train") {
    const json& points = require(j, "impulses", context);
    if (!points.is_array()) fail(context, "\"impulses\" must be an array");
    std::vector<UtilityImpulse> impulses;
    for (const json& p : points) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
          !p[1].is_number()) {
        fail(context, "impulses must be [location, mass] pairs");
      }
      impulses.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return UtilityModel::impulse_train(std::move(impulses));
  }
  fail(context, "unknown type \"" + type + "\"");
}

json coi_to_json(const CoIModel& coi) {
  switch (coi.kind()) {
    case CoIModel::Kind::kLinearKtn:
      return {{"type", "linear_ktn"}, {"k", coi.k()}};
    case CoIModel::Kind::kConstantPrice:
      return {{"type", "constant"}, {"K", coi.flat_amount()}};
    case CoIModel::Kind::kGrid:
    default: {
      json points = json::array();
      for (const auto& s : coi.samples()) {
        points.push_back({s.t, s.n, money_to_json(s.value)});
      }
      return {{"type", "grid"}, {"samples", points}};
    }
  }
}

CoIModel coi_from_json(const json& j) {
  const std::string context = "coi";
  const std::string type = require_string(j, "type", context);
  if (type == "linear_ktn") {
    return CoIModel::linear_ktn(require_number(j, "k", context));
  }
  if (type == "constant") {
    return CoIModel::constant_price(require_number(j, "K", context));
  }
  if (type == "grid") {
    const json& points = require(j, "samples", context);
    if (!points.is_array()) fail(context, "\"samples\" must be an array");
    std::vector<GridSample> samples;
    for (const json& p : points) {
      if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
          !p[1].is_number_integer()) {
        fail(context, "samples must be [t, n, value] triples");
      }
      samples.push_back({p[0].get<double>(), p[1].get<int>(),
                         money_from_json(p[2], context)});
    }
    return CoIModel::grid(std::move(samples));
  }
  fail(context, "unknown type \"" + type + "\"");
}

json job_to_json(const Job& job) {
  return {{"id", job.id},
          {"rt", running_time_to_json(job.rt)},
          {"utility", utility_to_json(job.utility)}};
}

Job job_from_json(const json& j) {
  const std::string context = "job";
  return Job{require_string(j, "id", context),
             running_time_from_json(require(j, "rt", context)),
             utility_from_json(require(j, "utility", context))};
}

json kvip_to_json(const KvipInstance& inst) {
  json items = json::array();
  for (const auto& item : inst.items) {
    json versions = json::array();
    for (const auto& v : item.versions) versions.push_back({v.weight, v.value});
    items.push_back(versions);
  }
  return {{"W", inst.capacity}, {"Kprime", inst.target}, {"items", items}};
}

KvipInstance kvip_from_json(const json& j) {
  const std::string context = "kvip instance";
  KvipInstance inst;
  inst.capacity = require_int(j, "W", context);
  inst.target = require_number(j, "Kprime", context);
  const json& items = require(j, "items", context);
  if (!items.is_array()) fail(context, "\"items\" must be an array");
  for (const json& item : items) {
    if (!item.is_array()) fail(context, "each item must be an array of versions");
    KvipItem parsed;
    for (const json& v : item) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
          !v[1].is_number()) {
        fail(context, "versions must be [weight, value] pairs");
      }
      parsed.versions.push_back({v[0].get<int>(), v[1].get<double>()});
    }
    inst.items.push_back(std::move(parsed));
  }
  return inst;
}

json ap_to_json(const ApInstance& ap) {
  json jobs = json::array();
  for (const auto& job : ap.jobs) jobs.push_back(job_to_json(job));
  return {{"MAXN", ap.max_n},
          {"K", ap.target},
          {"n_cap", ap.n_cap},
          {"coi", coi_to_json(ap.coi)},
          {"jobs", jobs}};
}

ApInstance ap_from_json(const json& j) {
  const std::string context = "ap instance";
  const int max_n = require_int(j, "MAXN", context);
  const double target = require_number(j, "K", context);
  CoIModel coi = coi_from_json(require(j, "coi", context));
  const json& jobs_json = require(j, "jobs", context);
  if (!jobs_json.is_array()) fail(context, "\"jobs\" must be an array");
  std::vector<Job> jobs;
  for (const json& job : jobs_json) jobs.push_back(job_from_json(job));
  if (j.contains("n_cap")) {
    return make_ap_instance(max_n, target, std::move(jobs), std::move(coi),
                            require_int(j, "n_cap", context));
  }
  return make_ap_instance(max_n, target, std::move(jobs), std::move(coi));
}

json scenario_to_json(const Scenario& s) {
  json arrivals = json::array();
  for (const auto& round : s.arrivals) {
    json batch = json::array();
    for (const auto& job : round) batch.push_back(job_to_json(job));
    arrivals.push_back(batch);
  }
  return {{"total_processors", s.total_processors},
          {"rounds", s.rounds},
          {"controller",
           {{"target_load", s.controller.target_load},
            {"gain", s.controller.gain},
            {"k0", s.controller.k},
            {"k_min", s.controller.k_min},
            {"k_max", s.controller.k_max}}},
          {"coi", coi_to_json(s.coi)},
          {"K", s.revenue_target},
          {"arrivals", arrivals}};
}

Scenario scenario_from_json(const json& j) {
  const std::string context = "scenario";
  Scenario s{0, 0, PricingController{}, CoIModel::linear_ktn(1.0), 0.0, {}};
  s.total_processors = require_int(j, "total_processors", context);
  s.rounds = require_int(j, "rounds", context);
  const json& ctrl = require(j, "controller", context);
  const std::string ctrl_context = "scenario.controller";
  s.controller.target_load = require_number(ctrl, "target_load", ctrl_context);
  s.controller.gain = require_number(ctrl, "gain", ctrl_context);
  s.controller.k = require_number(ctrl, "k0", ctrl_context);
  s.controller.k_min = require_number(ctrl, "k_min", ctrl_context);
  s.controller.k_max = require_number(ctrl, "k_max", ctrl_context);
  s.coi = coi_from_json(require(j, "coi", context));
  s.revenue_target = j.contains("K") ? require_number(j, "K", context) : 0.0;
  if (j.contains("arrivals")) {
    const json& arrivals = require(j, "arrivals", context);
    if (!arrivals.is_array()) fail(context, "\"arrivals\" must be an array");
    for (const json& batch : arrivals) {
      if (!batch.is_array()) {
        fail(context, "each arrivals entry must be an array of jobs");
      }
      std::vector<Job> jobs;
      for (const json& job : batch) jobs.push_back(job_from_json(job));
      s.arrivals.push_back(std::move(jobs));
    }
  }
  return s;
}

const char kTraceCsvHeader[] =
    "round,job_id,granted_n,running_time,cost,load_factor,k_before,k_after";

std::string format_number(double v) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v,
                                    std::chars_format::general, 9);
  if (result.ec != std::errc()) return "nan";
  return std::string(buffer, result.ptr);
}

void write_trace_csv(std::ostream& os, const std::vector<RoundTrace>& traces) {
  os << kTraceCsvHeader << '\n';
  for (const auto& trace : traces) {
    if (trace.jobs.empty()) {
      os << trace.round << ",,0,0,0," << format_number(trace.load_factor)
         << ',' << format_number(trace.k_before) << ','
         << format_number(trace.k_after) << '\n';
      continue;
    }
    for (const auto& rec : trace.jobs) {
      os << trace.round << ',' << rec.job_id << ',' << rec.granted_n << ','
         << format_number(rec.running_time) << ',' << format_number(rec.cost)
         << ',' << format_number(trace.load_factor) << ','
         << format_number(trace.k_before) << ','
         << format_number(trace.k_after) << '\n';
    }
  }
}

}  // namespace medalloc
