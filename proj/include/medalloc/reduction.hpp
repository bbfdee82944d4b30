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

#ifndef MEDALLOC_REDUCTION_HPP_
#define MEDALLOC_REDUCTION_HPP_

#include "medalloc/allocation.hpp"
#include "medalloc/kvip.hpp"
#include "medalloc/running_time.hpp"

namespace medalloc {

// Embeds a versioned-knapsack instance into an allocation instance whose
// decision answer coincides with the knapsack's. Used as a hard-instance
// generator: it exercises grid pricing surfaces, impulse utilities, and
// per-job table running times end to end.
//
// Construction: versions are pruned and given a degenerate (0, 0) version;
// t_base, a strictly decreasing curve with T(N) >= T(1)/N up to the largest
// version weight S, anchors per-job running-time tables that are perturbed
// within (T(N), T(N) + eps) — eps the smallest gap between base levels — so
// that at each N jobs order by their cost there (ties by index). A grid
// pricing surface prices each job's perturbed time at the matching version
// value and walls off everything else, and each job's utility is an impulse
// train placing mass C(w) at the running time of each version weight w,
// which makes the job's optimal set exactly {0} + its version weights.
//
// Throws std::domain_error when t_base is not strictly decreasing on 1..S,
// violates T(N) >= T(1)/N there, or does not cover S; and when the instance
// contains a zero-weight version of positive value (not embeddable: weight 0
// must mean "not run").
ApInstance reduce_kvip_to_ap(const KvipInstance& inst,
                             const RunningTimeModel& t_base);

}  // namespace medalloc

#endif  // MEDALLOC_REDUCTION_HPP_
