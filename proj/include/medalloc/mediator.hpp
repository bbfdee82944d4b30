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

#ifndef MEDALLOC_MEDIATOR_HPP_
#define MEDALLOC_MEDIATOR_HPP_

#include <string>
#include <vector>

#include "medalloc/allocation.hpp"
#include "medalloc/coi.hpp"
#include "medalloc/job.hpp"

namespace medalloc {

// A processor commitment: once granted, the processors stay dedicated to the
// job until its completion round.
struct Commitment {
  std::string job_id;
  int granted_n = 0;
  int release_round = 0;  // first round at which the processors are free again
};

struct ClusterState {
  int total_processors = 0;
  std::vector<Commitment> commitments;

  int committed() const;
};

// Multiplicative-proportional controller steering the load factor toward a
// target by scaling the pricing surface.
struct PricingController {
  double target_load = 0.9;  // in (0, 1]
  double gain = 0.0;         // >= 0
  double k = 1.0;            // current price scale
  double k_min = 0.0;
  double k_max = 0.0;
};

// k <- clamp(k * (1 + gain * (observed_load - target)), k_min, k_max).
// Rises when the cluster runs hot, falls when it runs cold, holds at the
// target. Returns the new scale.
double adjust_price(PricingController& ctrl, double observed_load);

struct RoundJobRecord {
  std::string job_id;
  int granted_n = 0;
  double running_time = 0.0;  // exact model time at the grant; 0 if deferred
  double cost = 0.0;
  bool deferred = false;
};

struct RoundTrace {
  int round = 0;
  std::vector<RoundJobRecord> jobs;
  double revenue = 0.0;
  bool meets_target = false;
  double load_factor = 0.0;  // committed / total after this round's grants
  double k_before = 0.0;
  double k_after = 0.0;
};

struct StepResult {
  Allocation allocation;
  RoundTrace trace;
  std::vector<Job> deferred;  // re-enter the next round's arrivals
};

// One mediation round: free completed commitments, price with the current
// scale, allocate within the available processors, commit the grants for
// ceil(T) rounds, then observe the load and adjust the price scale.
StepResult step(ClusterState& state, PricingController& ctrl,
                const CoIModel& base_coi, const std::vector<Job>& arrivals,
                double revenue_target, int round);

struct Scenario {
  int total_processors = 0;
  int rounds = 0;
  PricingController controller;
  CoIModel coi;
  double revenue_target = 0.0;  // reported, never blocks allocation
  std::vector<std::vector<Job>> arrivals;  // per round; may be shorter than rounds
};

// Deterministic replay of a scenario; deferred jobs precede the next round's
// scheduled arrivals. Throws std::invalid_argument naming the offending
// field on a malformed scenario.
std::vector<RoundTrace> run_scenario(const Scenario& scenario);

}  // namespace medalloc

#endif  // MEDALLOC_MEDIATOR_HPP_
