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

#ifndef MEDALLOC_JOB_HPP_
#define MEDALLOC_JOB_HPP_

#include <string>

#include "medalloc/coi.hpp"
#include "medalloc/ext_money.hpp"
#include "medalloc/running_time.hpp"
#include "medalloc/utility.hpp"

namespace medalloc {

// A submitted job, characterized entirely by its running-time curve and the
// user's utility function.
struct Job {
  std::string id;
  RunningTimeModel rt;
  UtilityModel utility;
};

// C(n) = CoI(T(n), n): the price of running the job on n processors. The
// composed expression is evaluated with extended-precision intermediates and
// rounded once, so algebraic invariances of the pricing surface (e.g. a flat
// k*T*N cost under an even split) survive at double precision.
ExtMoney job_cost(const Job& job, const CoIModel& coi, int n);

// Whether running on n2 processors is preferable to n1 < n2: the price
// increase must not exceed the utility integral between the two running
// times. n1 = 0 is the no-execution baseline with T(0) = inf and C(0) = 0.
// Callers must keep n2 at or below the job's saturation point.
// Throws std::domain_error when n1 >= n2.
bool prefers(const Job& job, const CoIModel& coi, int n1, int n2);

}  // namespace medalloc

#endif  // MEDALLOC_JOB_HPP_
