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

#ifndef MEDALLOC_ALLOCATION_HPP_
#define MEDALLOC_ALLOCATION_HPP_

#include <string>
#include <vector>

#include "medalloc/job.hpp"
#include "medalloc/kvip.hpp"
#include "medalloc/optimal_set.hpp"

namespace medalloc {

// The provider-side allocation problem: grant each job a processor count
// from its optimal set so that total revenue is maximized within the budget.
struct ApInstance {
  int max_n = 0;        // processor budget MAXN
  double target = 0.0;  // K: revenue bar for the decision question
  std::vector<Job> jobs;
  CoIModel coi;
  // Cap for per-job optimal-set computation. Grants above the budget are
  // never usable, so max_n is the natural choice.
  int n_cap = 0;
};

// Returns an ApInstance with n_cap defaulted to max(max_n, 1).
ApInstance make_ap_instance(int max_n, double target, std::vector<Job> jobs,
                            CoIModel coi);
ApInstance make_ap_instance(int max_n, double target, std::vector<Job> jobs,
                            CoIModel coi, int n_cap);

// The KVIP image of an allocation instance: one item per job, one version
// per nonzero optimal-set member (weight = processor count, value = job
// cost), with the member 0 mapped to skipping the item.
struct ApKvipImage {
  KvipInstance kvip;
  std::vector<OptimalSet> sets;                // per job
  std::vector<std::vector<int>> version_to_n;  // per item: version -> grant
  // One entry per optimal-set member whose price came out infinite; such
  // members cannot be priced and are omitted from the image.
  std::vector<std::string> warnings;
};

ApKvipImage ap_to_kvip(const ApInstance& ap);

struct JobGrant {
  std::string job_id;
  int granted_n = 0;  // 0 = not run
  double cost = 0.0;  // price charged; 0 when not run
};

struct Allocation {
  std::vector<JobGrant> grants;  // in job order
  double revenue = 0.0;
  bool meets_target = false;  // revenue >= K
  std::vector<std::string> warnings;
};

// Composes optimal sets, the KVIP image, the dynamic program, and the
// back-mapping into per-job grants.
Allocation solve_ap(const ApInstance& ap);

}  // namespace medalloc

#endif  // MEDALLOC_ALLOCATION_HPP_
