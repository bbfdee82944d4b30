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

#include "medalloc/kvip.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace medalloc {

namespace {

void check_instance(const KvipInstance& inst) {
  if (inst.capacity < 0) {
    throw std::invalid_argument("KvipInstance: capacity must be >= 0");
  }
  if (std::isnan(inst.target)) {
    throw std::invalid_argument("KvipInstance: target must not be NaN");
  }
  for (const auto& item : inst.items) {
    for (const auto& v : item.versions) {
      if (v.weight < 0) {
        throw std::invalid_argument("KvipInstance: version weights must be >= 0");
      }
      if (std::isnan(v.value) || v.value < 0.0 || std::isinf(v.value)) {
        throw std::invalid_argument(
            "KvipInstance: version values must be finite and >= 0");
      }
    }
  }
}

// Value-then-weight score of a partial packing; higher value wins, lower
// weight breaks ties.
struct Score {
  double value = 0.0;
  int weight = 0;

  friend bool operator==(const Score&, const Score&) = default;
};

bool better(const Score& a, const Score& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.weight < b.weight;
}

}  // namespace

std::vector<KvipVersion> prune_dominated(std::vector<KvipVersion> versions) {
  std::sort(versions.begin(), versions.end(),
            [](const KvipVersion& a, const KvipVersion& b) {
              if (a.weight != b.weight) return a.weight < b.weight;
              return a.value > b.value;
            });
  std::vector<KvipVersion> kept;
  for (const auto& v : versions) {
    // Every earlier kept version has smaller-or-equal weight, so v survives
    // only by strictly exceeding all values seen so far.
    if (kept.empty() || v.value > kept.back().value) kept.push_back(v);
  }
  return kept;
}

KvipResult kvip_optimize(const KvipInstance& inst) {
  check_instance(inst);
  const int item_count = static_cast<int>(inst.items.size());
  const int capacity = inst.capacity;

  // best[i][c]: optimal score over items i..M-1 with residual capacity c.
  std::vector<std::vector<Score>> best(
      static_cast<std::size_t>(item_count) + 1,
      std::vector<Score>(static_cast<std::size_t>(capacity) + 1));
  for (int i = item_count - 1; i >= 0; --i) {
    const auto& versions = inst.items[static_cast<std::size_t>(i)].versions;
    for (int c = 0; c <= capacity; ++c) {
      Score s = best[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)];
      for (const auto& v : versions) {
        if (v.weight > c) continue;
        const Score& rest = best[static_cast<std::size_t>(i) + 1]
                                [static_cast<std::size_t>(c - v.weight)];
        const Score candidate{v.value + rest.value, v.weight + rest.weight};
        if (better(candidate, s)) s = candidate;
      }
      best[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = s;
    }
  }

  // Walk forward taking at each item the smallest choice (skip first, then
  // version indices in order) that still reaches the optimal score: the
  // resulting witness is lexicographically least.
  KvipResult result;
  result.selection.choice.assign(static_cast<std::size_t>(item_count), kSkipItem);
  int c = capacity;
  for (int i = 0; i < item_count; ++i) {
    const Score& want = best[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    const Score& skip = best[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)];
    if (skip == want) continue;
    const auto& versions = inst.items[static_cast<std::size_t>(i)].versions;
    bool taken = false;
    for (int j = 0; j < static_cast<int>(versions.size()); ++j) {
      const auto& v = versions[static_cast<std::size_t>(j)];
      if (v.weight > c) continue;
      const Score& rest = best[static_cast<std::size_t>(i) + 1]
                              [static_cast<std::size_t>(c - v.weight)];
      if (Score{v.value + rest.value, v.weight + rest.weight} == want) {
        result.selection.choice[static_cast<std::size_t>(i)] = j;
        c -= v.weight;
        taken = true;
        break;
      }
    }
    if (!taken) {
      throw std::logic_error("kvip_optimize: reconstruction failed");
    }
  }

  const Score& top = best[0][static_cast<std::size_t>(capacity)];
  result.value = top.value;
  result.total_weight = top.weight;
  return result;
}

bool kvip_decision(const KvipInstance& inst) {
  // Base cases: negative capacity answers no outright; a nonpositive bar is
  // met by packing nothing.
  if (inst.capacity < 0) return false;
  check_instance(inst);
  if (inst.target <= 0.0) return true;
  return kvip_optimize(inst).value >= inst.target;
}

KvipResult kvip_bruteforce(const KvipInstance& inst) {
  check_instance(inst);
  constexpr double kMaxSelections = 1e7;
  double selections = 1.0;
  for (const auto& item : inst.items) {
    selections *= static_cast<double>(item.versions.size()) + 1.0;
    if (selections > kMaxSelections) {
      throw std::length_error(
          "kvip_bruteforce: instance has more than 10^7 selections");
    }
  }

  const int item_count = static_cast<int>(inst.items.size());
  std::vector<int> choice(static_cast<std::size_t>(item_count), kSkipItem);
  KvipResult best;
  best.selection.choice = choice;
  bool first = true;

  // Odometer over all selections in lexicographic order (skip < version 0 <
  // version 1 < ...); the first optimum encountered is the lexicographically
  // least, matching the dynamic program's tie-breaking.
  while (true) {
    double value = 0.0;
    int weight = 0;
    for (int i = item_count - 1; i >= 0; --i) {
      const int j = choice[static_cast<std::size_t>(i)];
      if (j == kSkipItem) continue;
      const auto& v =
          inst.items[static_cast<std::size_t>(i)].versions[static_cast<std::size_t>(j)];
      value += v.value;
      weight += v.weight;
    }
    if (weight <= inst.capacity) {
      const bool improves = first || value > best.value ||
                            (value == best.value && weight < best.total_weight);
      if (improves) {
        best.value = value;
        best.total_weight = weight;
        best.selection.choice = choice;
        first = false;
      }
    }

    int pos = item_count - 1;
    while (pos >= 0) {
      const int max_choice =
          static_cast<int>(inst.items[static_cast<std::size_t>(pos)].versions.size()) - 1;
      if (choice[static_cast<std::size_t>(pos)] < max_choice) {
        ++choice[static_cast<std::size_t>(pos)];
        break;
      }
      choice[static_cast<std::size_t>(pos)] = kSkipItem;
      --pos;
    }
    if (pos < 0) break;
  }
  return best;
}

}  // namespace medalloc
