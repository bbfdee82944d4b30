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

#include "medalloc/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace medalloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

ApInstance reduce_kvip_to_ap(const KvipInstance& inst,
                             const RunningTimeModel& t_base) {
  const int item_count = static_cast<int>(inst.items.size());

  // Normalize: add the degenerate (0, 0) version, prune dominated versions,
  // and keep the positive-weight ones. A zero-weight version of positive
  // value survives pruning and has no allocation counterpart.
  std::vector<std::vector<KvipVersion>> real(
      static_cast<std::size_t>(item_count));
  int max_weight = 0;
  for (int i = 0; i < item_count; ++i) {
    auto versions = inst.items[static_cast<std::size_t>(i)].versions;
    versions.push_back({0, 0.0});
    versions = prune_dominated(std::move(versions));
    for (const auto& v : versions) {
      if (v.weight == 0 && v.value > 0.0) {
        throw std::domain_error(
            "reduce_kvip_to_ap: zero-weight versions of positive value are "
            "not embeddable");
      }
      if (v.weight > 0) real[static_cast<std::size_t>(i)].push_back(v);
      max_weight = std::max(max_weight, v.weight);
    }
  }
  const int s = std::max(max_weight, 1);

  if (auto limit = t_base.domain_limit(); limit && *limit < s) {
    throw std::domain_error(
        "reduce_kvip_to_ap: t_base must cover 1.." + std::to_string(s));
  }
  std::vector<double> base(static_cast<std::size_t>(s) + 1);
  for (int n = 1; n <= s; ++n) {
    base[static_cast<std::size_t>(n)] = t_base.eval(n);
  }
  for (int n = 2; n <= s; ++n) {
    if (!(base[static_cast<std::size_t>(n)] < base[static_cast<std::size_t>(n) - 1])) {
      throw std::domain_error(
          "reduce_kvip_to_ap: t_base must be strictly decreasing on 1.." +
          std::to_string(s));
    }
    if (base[static_cast<std::size_t>(n)] < base[1] / n) {
      throw std::domain_error(
          "reduce_kvip_to_ap: t_base violates T(N) >= T(1)/N at N = " +
          std::to_string(n));
    }
  }

  // Smallest gap between base levels; all perturbed times at N stay inside
  // (T(N), T(N) + eps) so bands at distinct N never mix.
  double eps = base[1] / 2.0;
  for (int n = 2; n <= s; ++n) {
    eps = std::min(eps, base[static_cast<std::size_t>(n) - 1] -
                            base[static_cast<std::size_t>(n)]);
  }
  // Offsets floor + rank*step with floor = (M+1)*step keep every perturbed
  // table above T_J(1)/N, which the bare rank*eps/(M+1) scheme can violate
  // when the base is tight and cost ranks invert across N.
  const double step = eps / (4.0 * (item_count + 1));
  const double floor_offset = (item_count + 1) * step;

  // c[i][N]: the item's value at weight N, infinite when absent.
  std::vector<std::vector<double>> cost(
      static_cast<std::size_t>(item_count),
      std::vector<double>(static_cast<std::size_t>(s) + 1, kInf));
  for (int i = 0; i < item_count; ++i) {
    for (const auto& v : real[static_cast<std::size_t>(i)]) {
      cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(v.weight)] =
          v.value;
    }
  }

  // Perturbed running times: at each N, jobs order by their cost there
  // (cheaper earlier, ties by index), so along a band the price surface
  // steps upward with time.
  std::vector<std::vector<double>> times(
      static_cast<std::size_t>(item_count),
      std::vector<double>(static_cast<std::size_t>(s) + 1, 0.0));
  std::vector<int> order(static_cast<std::size_t>(item_count));
  for (int n = 1; n <= s; ++n) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cost[static_cast<std::size_t>(a)][static_cast<std::size_t>(n)] <
             cost[static_cast<std::size_t>(b)][static_cast<std::size_t>(n)];
    });
    for (int rank = 1; rank <= item_count; ++rank) {
      const int job = order[static_cast<std::size_t>(rank) - 1];
      times[static_cast<std::size_t>(job)][static_cast<std::size_t>(n)] =
          base[static_cast<std::size_t>(n)] + floor_offset + rank * step;
    }
  }

  // Price surface: every job's perturbed time is a sample carrying the
  // job's cost at that N (infinite when the item has no such version).
  std::vector<GridSample> samples;
  samples.reserve(static_cast<std::size_t>(item_count) * static_cast<std::size_t>(s));
  for (int n = 1; n <= s; ++n) {
    for (int i = 0; i < item_count; ++i) {
      const double c = cost[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
      samples.push_back(
          {times[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)], n,
           c == kInf ? ExtMoney::inf() : ExtMoney(c)});
    }
  }

  // Jobs: the perturbed table plus an impulse train placing mass C(w) at the
  // running time of each version weight w. Each acceptance then fires with
  // exact equality at the version weights and nowhere else.
  std::vector<Job> jobs;
  jobs.reserve(static_cast<std::size_t>(item_count));
  for (int i = 0; i < item_count; ++i) {
    std::vector<double> table(
        times[static_cast<std::size_t>(i)].begin() + 1,
        times[static_cast<std::size_t>(i)].end());
    std::vector<UtilityImpulse> impulses;
    const auto& versions = real[static_cast<std::size_t>(i)];
    for (auto it = versions.rbegin(); it != versions.rend(); ++it) {
      impulses.push_back(
          {times[static_cast<std::size_t>(i)][static_cast<std::size_t>(it->weight)],
           it->value});
    }
    jobs.push_back(Job{"item" + std::to_string(i + 1),
                       RunningTimeModel::table(std::move(table)),
                       UtilityModel::impulse_train(std::move(impulses))});
  }

  return make_ap_instance(inst.capacity, inst.target, std::move(jobs),
                          CoIModel::grid(std::move(samples)),
                          std::max(inst.capacity, 1));
}

}  // namespace medalloc
