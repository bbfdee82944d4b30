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
//
// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails or overruns its
// time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "medalloc/cli.hpp"
#include "medalloc/io.hpp"
#include "medalloc/mediator.hpp"
#include "medalloc/optimal_set.hpp"
#include "medalloc/reduction.hpp"
#include "support/generators.hpp"
#include "support/quadrature.hpp"

using namespace medalloc;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

std::vector<int> prefix(int up_to) {
  std::vector<int> out;
  for (int i = 0; i <= up_to; ++i) out.push_back(i);
  return out;
}

bool fail(std::string& detail, const std::string& message) {
  if (detail.empty()) detail = message;
  return false;
}

// --- criterion 1: flat cost under even splitting, exactly ------------------

bool check_even_split_invariance(std::string& detail) {
  const Job job{"J1", RunningTimeModel::even_split(100.0),
                UtilityModel::constant(1.0)};
  const CoIModel coi = CoIModel::linear_ktn(2.0);
  for (int n = 1; n <= 10000; ++n) {
    const ExtMoney cost = job_cost(job, coi, n);
    if (!(cost == ExtMoney(200.0))) {
      return fail(detail, "cost at n=" + std::to_string(n) + " is " +
                              std::to_string(cost.amount()) +
                              ", expected exactly 200");
    }
  }
  if (optimal_set(job, coi, 1000).members != prefix(1000)) {
    return fail(detail, "optimal set is not {0..1000}");
  }
  return true;
}

// --- criterion 2: deadline cutoff matches the scan oracle ------------------

bool check_deadline_cutoff(std::string& detail) {
  const Job fixture{"J2", RunningTimeModel::power_law(100.0, 0.0, 0.5),
                    UtilityModel::step_to_infinity(40.0)};
  const CoIModel linear1 = CoIModel::linear_ktn(1.0);
  if (optimal_set(fixture, linear1, 20).members != prefix(7)) {
    return fail(detail, "fixture set is not {0..7}");
  }
  if (step_cutoff_optimal_set(1.0, 100.0, 0.0, 0.5, 40.0, 20).members !=
      prefix(7)) {
    return fail(detail, "closed form is not {0..7}");
  }

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> t1_dist(40.0, 250.0);
  std::uniform_real_distribution<double> alpha_dist(0.3, 0.95);
  std::uniform_real_distribution<double> k_dist(0.2, 5.0);
  std::uniform_real_distribution<double> frac(0.05, 0.4);
  std::uniform_real_distribution<double> cutoff_frac(0.05, 1.3);
  for (int trial = 0; trial < 20; ++trial) {
    const double t1 = t1_dist(rng);
    const double t_inf = trial % 2 == 0 ? 0.0 : t1 * frac(rng);
    const double alpha = alpha_dist(rng);
    const double k = k_dist(rng);
    const double cutoff = t1 * cutoff_frac(rng);
    const Job job{"J", RunningTimeModel::power_law(t1, t_inf, alpha),
                  UtilityModel::step_to_infinity(cutoff)};
    const auto recursion = optimal_set(job, CoIModel::linear_ktn(k), 25);
    const auto closed =
        step_cutoff_optimal_set(k, t1, t_inf, alpha, cutoff, 25);
    if (recursion.members != closed.members) {
      return fail(detail, "sweep mismatch at trial " + std::to_string(trial));
    }
  }
  return true;
}

// --- criterion 3: flat pricing saturates at the table's plateau ------------

bool check_flat_price_saturation(std::string& detail) {
  const RunningTimeModel rt = RunningTimeModel::table({10.0, 6.0, 5.0, 5.0});
  const CoIModel coi = CoIModel::constant_price(9.0);
  const std::vector<UtilityModel> utilities = {
      UtilityModel::constant(0.5),
      UtilityModel::constant(2.0),
      UtilityModel::constant(11.0),
      UtilityModel::step_to_infinity(3.0),
      UtilityModel::step_to_infinity(20.0),
      UtilityModel::step_to_infinity(100.0),
      UtilityModel::piecewise_constant({{1.0, 2.0}}),
      UtilityModel::piecewise_constant({{5.0, 0.1}, {9.0, 4.0}}),
      UtilityModel::impulse_train({{12.0, 9.0}}),
      UtilityModel::impulse_train({{15.0, 50.0}, {40.0, 1.0}}),
  };
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    const Job job{"J3", rt, utilities[i]};
    if (optimal_set(job, coi, 10).members != prefix(3)) {
      return fail(detail, "utility model " + std::to_string(i) +
                              " does not yield {0,1,2,3}");
    }
  }
  return true;
}

// --- criterion 4: constant-utility plateau against the objective scan ------

long double plateau_f(const PlateauParams& p, int n) {
  const long double t =
      (static_cast<long double>(p.t1) - p.t_inf) /
          std::pow(static_cast<long double>(n),
                    static_cast<long double>(p.alpha)) +
      p.t_inf;
  return (static_cast<long double>(p.k) * n + p.a) * t;
}

// Incumbent recursion straight on f(N), comparisons at 1e-12 relative.
int plateau_scan(const PlateauParams& p, int cap) {
  int incumbent = 1;
  for (int n = 2; n <= cap; ++n) {
    const long double fn = plateau_f(p, n);
    const long double fi = plateau_f(p, incumbent);
    if (fn <= fi * (1.0L + 1e-12L)) incumbent = n;
  }
  return incumbent;
}

// Smallest relative decision margin along the scan; draws with knife-edge
// ties are resampled so that the oracle and the recursion cannot disagree
// on rounding alone.
long double plateau_margin(const PlateauParams& p, int cap) {
  long double margin = 1.0L;
  int incumbent = 1;
  for (int n = 2; n <= cap; ++n) {
    const long double fn = plateau_f(p, n);
    const long double fi = plateau_f(p, incumbent);
    margin = std::min(margin, std::fabs(fn - fi) / std::max(fn, fi));
    if (fn <= fi) incumbent = n;
  }
  return margin;
}

bool check_plateau(std::string& detail) {
  const PlateauParams fixture{1.0, 10.0, 0.5, 100.0, 0.0};
  if (constant_utility_plateau(fixture) != 10) {
    return fail(detail, "fixture plateau is not 10");
  }
  const Job fixture_job{"J4", RunningTimeModel::power_law(100.0, 0.0, 0.5),
                        UtilityModel::constant(10.0)};
  if (optimal_set(fixture_job, CoIModel::linear_ktn(1.0), 20).members !=
      prefix(10)) {
    return fail(detail, "fixture set is not {0..10}");
  }

  std::mt19937_64 rng(4096);
  std::uniform_real_distribution<double> k_dist(0.2, 3.0);
  std::uniform_real_distribution<double> a_dist(0.5, 80.0);
  std::uniform_real_distribution<double> alpha_dist(0.25, 0.9);
  std::uniform_real_distribution<double> t1_dist(30.0, 300.0);
  std::uniform_real_distribution<double> frac(0.0, 0.3);
  int accepted = 0;
  while (accepted < 50) {
    const double t1 = t1_dist(rng);
    const PlateauParams p{k_dist(rng), a_dist(rng), alpha_dist(rng), t1,
                          rng() % 2 == 0 ? 0.0 : t1 * frac(rng)};
    const int plateau = constant_utility_plateau(p);
    const int cap = 4 * plateau + 8;
    if (plateau_margin(p, cap) < 1e-9L) continue;  // knife-edge draw
    ++accepted;
    if (plateau_scan(p, cap) != plateau) {
      return fail(detail, "scan disagrees at k=" + std::to_string(p.k) +
                              " a=" + std::to_string(p.a) +
                              " alpha=" + std::to_string(p.alpha));
    }
    const long double best = plateau_f(p, plateau);
    for (int n = 1; n <= 4 * plateau; ++n) {
      if (best > plateau_f(p, n) * (1.0L + 1e-12L)) {
        return fail(detail, "plateau is not the scanned minimum");
      }
    }
  }
  return true;
}

// --- criterion 5: threshold utility sits exactly on the boundary -----------

bool check_threshold_indifference(std::string& detail) {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> k_dist(0.2, 4.0);
  std::uniform_real_distribution<double> alpha_dist(0.3, 1.0);
  std::uniform_real_distribution<double> t1_dist(30.0, 300.0);
  std::uniform_real_distribution<double> frac(0.0, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    const double k = k_dist(rng);
    const double alpha = alpha_dist(rng);
    const double t1 = t1_dist(rng);
    const double t_inf = trial % 2 == 0 ? 0.0 : t1 * frac(rng);
    const ThresholdUtility u(k, alpha, t1, t_inf);
    const RunningTimeModel rt = RunningTimeModel::power_law(t1, t_inf, alpha);
    const CoIModel coi = CoIModel::linear_ktn(k);
    const Job job{"J", rt, UtilityModel::constant(0.0)};

    std::vector<double> cost(65), step(65, 0.0);
    for (int n = 1; n <= 64; ++n) {
      cost[static_cast<std::size_t>(n)] = job_cost(job, coi, n).amount();
      if (n >= 2) {
        step[static_cast<std::size_t>(n)] = testsupport::integrate(
            [&u](double t) { return u(t); }, rt.eval(n), rt.eval(n - 1),
            1e-12);
      }
    }
    for (int n1 = 1; n1 < 64; ++n1) {
      double gain = 0.0;
      for (int n2 = n1 + 1; n2 <= 64; ++n2) {
        gain += step[static_cast<std::size_t>(n2)];
        const double delta = cost[static_cast<std::size_t>(n2)] -
                             cost[static_cast<std::size_t>(n1)];
        const double bound =
            1e-9 * std::max(1.0, cost[static_cast<std::size_t>(n2)]);
        if (std::fabs(delta - gain) > bound) {
          return fail(detail, "gap " + std::to_string(std::fabs(delta - gain)) +
                                  " at trial " + std::to_string(trial) +
                                  " N1=" + std::to_string(n1) +
                                  " N2=" + std::to_string(n2));
        }
      }
    }
  }
  return true;
}

// --- criterion 6: dynamic program against exhaustive enumeration -----------

bool check_kvip_oracle(std::string& detail) {
  std::mt19937_64 rng(6006);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool integral = trial % 2 == 0;
    const KvipInstance inst =
        testsupport::random_kvip_instance(rng, 4, 3, 12, 12, integral);
    const KvipResult fast = kvip_optimize(inst);
    const KvipResult slow = kvip_bruteforce(inst);
    const bool match =
        integral ? fast.value == slow.value
                 : std::fabs(fast.value - slow.value) <=
                       1e-12 * std::max(1.0, std::fabs(slow.value));
    if (!match) {
      return fail(detail, "value mismatch at trial " + std::to_string(trial));
    }
    if (fast.total_weight > inst.capacity) {
      return fail(detail, "infeasible selection at trial " +
                              std::to_string(trial));
    }
  }
  return true;
}

// --- criterion 7: allocation equals exhaustive member search ---------------

bool check_allocation_oracle(std::string& detail) {
  std::mt19937_64 rng(7007);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Job> jobs;
    const int job_count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < job_count; ++i) {
      jobs.push_back(testsupport::random_job(rng, "J" + std::to_string(i)));
    }
    const ApInstance ap =
        make_ap_instance(static_cast<int>(rng() % 9), 0.0, std::move(jobs),
                         testsupport::random_priced_coi(rng));
    const Allocation alloc = solve_ap(ap);
    const double oracle = testsupport::exhaustive_ap_revenue(ap);
    if (std::fabs(alloc.revenue - oracle) >
        1e-12 * std::max(1.0, oracle)) {
      return fail(detail, "revenue " + std::to_string(alloc.revenue) +
                              " vs oracle " + std::to_string(oracle) +
                              " at trial " + std::to_string(trial));
    }
    int total = 0;
    for (const auto& grant : alloc.grants) total += grant.granted_n;
    if (total > ap.max_n) {
      return fail(detail, "budget exceeded at trial " + std::to_string(trial));
    }
  }
  return true;
}

// --- criterion 8: knapsack embeds into allocation and back -----------------

bool check_reduction_round_trip(std::string& detail) {
  std::mt19937_64 rng(8008);
  std::uniform_int_distribution<int> item_count(0, 3);
  std::uniform_int_distribution<int> version_count(1, 3);
  std::uniform_int_distribution<int> weight(1, 8);
  std::uniform_int_distribution<int> value(0, 20);
  for (int trial = 0; trial < 200; ++trial) {
    KvipInstance inst;
    inst.capacity = static_cast<int>(rng() % 10);
    const int items = item_count(rng);
    for (int i = 0; i < items; ++i) {
      KvipItem item;
      const int versions = version_count(rng);
      for (int j = 0; j < versions; ++j) {
        item.versions.push_back(
            {weight(rng), static_cast<double>(value(rng))});
      }
      inst.items.push_back(std::move(item));
    }
    inst.target = static_cast<double>(value(rng));

    const RunningTimeModel base =
        trial % 2 == 0 ? RunningTimeModel::power_law(40.0, 0.0, 0.7)
                       : RunningTimeModel::even_split(24.0);
    const ApInstance ap = reduce_kvip_to_ap(inst, base);
    if (solve_ap(ap).meets_target != kvip_decision(inst)) {
      return fail(detail, "decision mismatch at trial " + std::to_string(trial));
    }
    // Domination over every sample pair of the generated surface.
    const auto& samples = ap.coi.samples();
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        if (a.t <= b.t && a.n <= b.n && a.value > b.value) {
          return fail(detail,
                      "domination violation at trial " + std::to_string(trial));
        }
      }
    }
  }
  return true;
}

// --- criterion 9: simulator safety, monotone pricing, determinism ----------

bool check_simulator(std::string& detail) {
  Scenario scenario{4,
                    10,
                    PricingController{0.9, 0.5, 1.0, 0.5, 8.0},
                    CoIModel::linear_ktn(1.0),
                    0.0,
                    {}};
  for (int r = 0; r < scenario.rounds; ++r) {
    scenario.arrivals.push_back(
        {Job{"A" + std::to_string(r), RunningTimeModel::power_law(8.0, 0.0, 0.5),
             UtilityModel::constant(50.0)},
         Job{"B" + std::to_string(r), RunningTimeModel::power_law(8.0, 0.0, 0.5),
             UtilityModel::constant(50.0)}});
  }

  const auto traces = run_scenario(scenario);
  if (traces.size() != 10) return fail(detail, "expected 10 rounds");
  double prev_k = scenario.controller.k;
  for (const auto& trace : traces) {
    if (trace.load_factor > 1.0) {
      return fail(detail, "capacity violated at round " +
                              std::to_string(trace.round));
    }
    if (trace.k_before != prev_k) {
      return fail(detail, "price scale not carried between rounds");
    }
    if (trace.k_after < scenario.controller.k_max &&
        trace.k_after < trace.k_before) {
      return fail(detail, "price decreased before the clamp at round " +
                              std::to_string(trace.round));
    }
    prev_k = trace.k_after;
  }

  std::ostringstream first, second;
  write_trace_csv(first, run_scenario(scenario));
  write_trace_csv(second, run_scenario(scenario));
  if (first.str() != second.str()) {
    return fail(detail, "replay is not byte-identical");
  }
  return true;
}

// --- criterion 10: the examples command ------------------------------------

bool check_examples_command(std::string& detail) {
  std::ostringstream out, err;
  const int status = run_cli({"examples"}, out, err);
  if (status != 0) {
    return fail(detail, "exit status " + std::to_string(status));
  }
  const std::string text = out.str();
  if (text.find("FAIL") != std::string::npos) {
    return fail(detail, "a fixture reported FAIL");
  }
  std::size_t count = 0;
  for (std::size_t pos = text.find("PASS"); pos != std::string::npos;
       pos = text.find("PASS", pos + 1)) {
    ++count;
  }
  if (count < 4) return fail(detail, "fewer than four PASS lines");
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "even-split cost invariance, exact at double precision", 1.0,
       check_even_split_invariance},
      {2, "deadline cutoff set equals the scan oracle", 1.0,
       check_deadline_cutoff},
      {3, "flat pricing saturates at the table plateau for any utility", 1.0,
       check_flat_price_saturation},
      {4, "constant-utility plateau matches the objective scan", 5.0,
       check_plateau},
      {5, "threshold utility leaves all pairs indifferent within 1e-9", 5.0,
       check_threshold_indifference},
      {6, "knapsack dynamic program equals brute force on 1000 instances",
       10.0, check_kvip_oracle},
      {7, "allocation equals exhaustive member search on 200 fixtures", 30.0,
       check_allocation_oracle},
      {8, "knapsack embedding round-trips decisions on 200 instances", 60.0,
       check_reduction_round_trip},
      {9, "simulator holds capacity, monotone price, identical replays", 5.0,
       check_simulator},
      {10, "examples command reports PASS with exit 0", 5.0,
       check_examples_command},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && seconds > criterion.budget_seconds) {
      ok = false;
      detail = "runtime " + std::to_string(seconds) + "s exceeds " +
               std::to_string(criterion.budget_seconds) + "s";
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), seconds);
    if (!ok) {
      ++failures;
      if (!detail.empty()) std::printf("       %s\n", detail.c_str());
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
