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

#include "medalloc/mediator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace medalloc {

int ClusterState::committed() const {
  int total = 0;
  for (const auto& c : commitments) total += c.granted_n;
  return total;
}

double adjust_price(PricingController& ctrl, double observed_load) {
  if (std::isnan(observed_load) || observed_load < 0.0 || observed_load > 1.0) {
    throw std::domain_error("adjust_price: load must lie in [0, 1]");
  }
  const double raw = ctrl.k * (1.0 + ctrl.gain * (observed_load - ctrl.target_load));
  ctrl.k = std::clamp(raw, ctrl.k_min, ctrl.k_max);
  return ctrl.k;
}

StepResult step(ClusterState& state, PricingController& ctrl,
                const CoIModel& base_coi, const std::vector<Job>& arrivals,
                double revenue_target, int round) {
  // Free processors whose jobs completed before this round.
  std::erase_if(state.commitments, [round](const Commitment& c) {
    return c.release_round <= round;
  });
  const int available = state.total_processors - state.committed();

  StepResult result;
  result.trace.round = round;
  result.trace.k_before = ctrl.k;

  const CoIModel priced = base_coi.scaled(ctrl.k);
  const ApInstance ap = make_ap_instance(available, revenue_target,
                                         arrivals, priced,
                                         std::max(available, 1));
  result.allocation = solve_ap(ap);

  for (std::size_t i = 0; i < arrivals.size(); ++i) {
    const JobGrant& grant = result.allocation.grants[i];
    RoundJobRecord record;
    record.job_id = grant.job_id;
    record.granted_n = grant.granted_n;
    if (grant.granted_n > 0) {
      record.running_time = arrivals[i].rt.eval(grant.granted_n);
      record.cost = grant.cost;
      // Rounds are the clock: the processors stay held for ceil(T) rounds,
      // while the price uses the exact running time.
      const int duration =
          static_cast<int>(std::ceil(record.running_time));
      state.commitments.push_back(
          {grant.job_id, grant.granted_n, round + std::max(duration, 1)});
    } else {
      record.deferred = true;
      result.deferred.push_back(arrivals[i]);
    }
    result.trace.jobs.push_back(std::move(record));
  }

  result.trace.revenue = result.allocation.revenue;
  result.trace.meets_target = result.allocation.meets_target;
  result.trace.load_factor =
      state.total_processors > 0
          ? static_cast<double>(state.committed()) / state.total_processors
          : 0.0;
  adjust_price(ctrl, result.trace.load_factor);
  result.trace.k_after = ctrl.k;
  return result;
}

std::vector<RoundTrace> run_scenario(const Scenario& scenario) {
  if (scenario.total_processors < 1) {
    throw std::invalid_argument(
        "Scenario: total_processors must be >= 1");
  }
  if (scenario.rounds < 0) {
    throw std::invalid_argument("Scenario: rounds must be >= 0");
  }
  if (!(scenario.controller.target_load > 0.0) ||
      scenario.controller.target_load > 1.0) {
    throw std::invalid_argument(
        "Scenario: controller.target_load must lie in (0, 1]");
  }
  if (std::isnan(scenario.controller.gain) || scenario.controller.gain < 0.0) {
    throw std::invalid_argument("Scenario: controller.gain must be >= 0");
  }
  if (!(scenario.controller.k_min <= scenario.controller.k) ||
      !(scenario.controller.k <= scenario.controller.k_max)) {
    throw std::invalid_argument(
        "Scenario: controller.k0 must lie within [k_min, k_max]");
  }
  if (static_cast<int>(scenario.arrivals.size()) > scenario.rounds) {
    throw std::invalid_argument(
        "Scenario: arrivals lists exceed the round count");
  }

  ClusterState state;
  state.total_processors = scenario.total_processors;
  PricingController ctrl = scenario.controller;

  std::vector<RoundTrace> traces;
  traces.reserve(static_cast<std::size_t>(scenario.rounds));
  std::vector<Job> carried;
  for (int round = 0; round < scenario.rounds; ++round) {
    // Deferred jobs lead the queue, then this round's scheduled arrivals.
    std::vector<Job> batch = std::move(carried);
    if (static_cast<std::size_t>(round) < scenario.arrivals.size()) {
      const auto& scheduled = scenario.arrivals[static_cast<std::size_t>(round)];
      batch.insert(batch.end(), scheduled.begin(), scheduled.end());
    }
    StepResult result = step(state, ctrl, scenario.coi, batch,
                             scenario.revenue_target, round);
    carried = std::move(result.deferred);
    traces.push_back(std::move(result.trace));
  }
  return traces;
}

}  // namespace medalloc
