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

#include "medalloc/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace medalloc {

namespace {

void check_ap(const ApInstance& ap) {
  if (ap.max_n < 0) {
    throw std::invalid_argument("ApInstance: MAXN must be >= 0");
  }
  if (ap.n_cap < 1) {
    throw std::invalid_argument("ApInstance: n_cap must be >= 1");
  }
  if (std::isnan(ap.target)) {
    throw std::invalid_argument("ApInstance: K must not be NaN");
  }
}

}  // namespace

ApInstance make_ap_instance(int max_n, double target, std::vector<Job> jobs,
                            CoIModel coi) {
  return make_ap_instance(max_n, target, std::move(jobs), std::move(coi),
                          std::max(max_n, 1));
}

ApInstance make_ap_instance(int max_n, double target, std::vector<Job> jobs,
                            CoIModel coi, int n_cap) {
  ApInstance ap{max_n, target, std::move(jobs), std::move(coi), n_cap};
  check_ap(ap);
  return ap;
}

ApKvipImage ap_to_kvip(const ApInstance& ap) {
  check_ap(ap);
  ApKvipImage image;
  image.kvip.capacity = ap.max_n;
  image.kvip.target = ap.target;
  image.kvip.items.reserve(ap.jobs.size());
  image.version_to_n.reserve(ap.jobs.size());
  image.sets.reserve(ap.jobs.size());

  for (const Job& job : ap.jobs) {
    OptimalSet set = optimal_set(job, ap.coi, ap.n_cap);
    KvipItem item;
    std::vector<int> grants;
    for (int member : set.members) {
      if (member == 0) continue;  // "not run" maps to skipping the item
      const ExtMoney cost = job_cost(job, ap.coi, member);
      if (cost.is_inf()) {
        image.warnings.push_back("job " + job.id + ": optimal-set member " +
                                 std::to_string(member) +
                                 " has infinite cost and cannot be priced");
        continue;
      }
      item.versions.push_back({member, cost.amount()});
      grants.push_back(member);
    }
    image.kvip.items.push_back(std::move(item));
    image.version_to_n.push_back(std::move(grants));
    image.sets.push_back(std::move(set));
  }
  return image;
}

Allocation solve_ap(const ApInstance& ap) {
  ApKvipImage image = ap_to_kvip(ap);
  const KvipResult packed = kvip_optimize(image.kvip);

  Allocation alloc;
  alloc.warnings = std::move(image.warnings);
  alloc.grants.reserve(ap.jobs.size());
  double revenue = 0.0;
  for (std::size_t i = 0; i < ap.jobs.size(); ++i) {
    JobGrant grant;
    grant.job_id = ap.jobs[i].id;
    const int choice = packed.selection.choice[i];
    if (choice != kSkipItem) {
      grant.granted_n = image.version_to_n[i][static_cast<std::size_t>(choice)];
      grant.cost =
          image.kvip.items[i].versions[static_cast<std::size_t>(choice)].value;
      revenue += grant.cost;
    }
    alloc.grants.push_back(std::move(grant));
  }
  alloc.revenue = revenue;
  alloc.meets_target = revenue >= ap.target;
  return alloc;
}

}  // namespace medalloc
