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

#ifndef MEDALLOC_KVIP_HPP_
#define MEDALLOC_KVIP_HPP_

#include <vector>

namespace medalloc {

// Knapsack with versioned items (KVIP): each item exists in several
// (weight, value) versions and at most one version per item may enter the
// knapsack. Weights are integers (the dynamic program indexes capacity by
// weight); values are nonnegative reals.
struct KvipVersion {
  int weight;
  double value;

  friend bool operator==(const KvipVersion&, const KvipVersion&) = default;
};

struct KvipItem {
  std::vector<KvipVersion> versions;
};

struct KvipInstance {
  int capacity = 0;     // W >= 0
  double target = 0.0;  // K': the revenue bar for the decision question
  std::vector<KvipItem> items;
};

// Per-item choice: the selected version index, or kSkipItem for none.
inline constexpr int kSkipItem = -1;

struct Selection {
  std::vector<int> choice;  // one entry per item
};

struct KvipResult {
  double value = 0.0;
  int total_weight = 0;
  Selection selection;
};

// Removes every version that another version of the same item renders
// pointless (lower-or-equal weight with greater-or-equal value); exact
// duplicates keep one copy. The result is sorted by weight, with weights and
// values strictly increasing together, and preserves the optimum of any
// instance the item participates in.
std::vector<KvipVersion> prune_dominated(std::vector<KvipVersion> versions);

// Maximum total value packable within the capacity, with a witness
// selection. Grouped-knapsack dynamic programming over (item suffix,
// residual capacity), O(W * sum V_i). Ties prefer the smaller total weight,
// then the lexicographically smallest per-item choices (skip sorts before
// every version index). Throws std::invalid_argument on negative weights or
// values.
KvipResult kvip_optimize(const KvipInstance& inst);

// Whether some feasible selection reaches the target value. A nonpositive
// target is always reachable (select nothing).
bool kvip_decision(const KvipInstance& inst);

// Exhaustive-enumeration reference solver with the same tie-breaking rules.
// Refuses instances with more than 10^7 candidate selections.
KvipResult kvip_bruteforce(const KvipInstance& inst);

}  // namespace medalloc

#endif  // MEDALLOC_KVIP_HPP_
