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

#include "medalloc/job.hpp"

#include <limits>
#include <stdexcept>

namespace medalloc {

ExtMoney job_cost(const Job& job, const CoIModel& coi, int n) {
  const long double cost = coi.eval_ext(job.rt.eval_ext(n), n);
  if (cost == std::numeric_limits<long double>::infinity()) {
    return ExtMoney::inf();
  }
  return ExtMoney(static_cast<double>(cost));
}

bool prefers(const Job& job, const CoIModel& coi, int n1, int n2) {
  if (n1 < 0 || n1 >= n2) {
    throw std::domain_error("prefers: requires 0 <= n1 < n2");
  }
  const ExtMoney c1 = n1 == 0 ? ExtMoney(0.0) : job_cost(job, coi, n1);
  const ExtMoney c2 = job_cost(job, coi, n2);
  const double upper =
      n1 == 0 ? std::numeric_limits<double>::infinity() : job.rt.eval(n1);
  const ExtMoney gain = job.utility.integral(job.rt.eval(n2), upper);
  // C(n2) - C(n1) <= integral, rearranged so that infinities never cancel.
  return c2 <= c1 + gain;
}

}  // namespace medalloc
