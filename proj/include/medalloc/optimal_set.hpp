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

#ifndef MEDALLOC_OPTIMAL_SET_HPP_
#define MEDALLOC_OPTIMAL_SET_HPP_

#include <vector>

#include "medalloc/job.hpp"
#include "medalloc/utility.hpp"

namespace medalloc {

// The set of defensible processor grants for one job: every value the
// availability-capped optimum takes as the cap sweeps 0..n_cap. Always
// contains 0 (the job may simply not run).
struct OptimalSet {
  std::vector<int> members;  // sorted ascending, members[0] == 0
  int n_cap = 1;

  bool contains(int n) const;
  int max_member() const { return members.back(); }
  // True when the set is exactly {0, 1, ..., max_member()}.
  bool is_prefix() const;
};

// Optimal processor count for the job when at most n_max processors are on
// offer. Evaluated by the incumbent recursion: starting from 0, each
// candidate m = 1..n_max replaces the incumbent iff the job prefers m over
// it. Candidates beyond the saturation point or the running-time model's
// domain are never preferable and are skipped.
int optimal_n(const Job& job, const CoIModel& coi, int n_max);

// All incumbent values for caps 0..n_cap, collected in one forward pass.
OptimalSet optimal_set(const Job& job, const CoIModel& coi, int n_cap);

// Closed-form sets for the three analytically solvable model families,
// used as independent oracles for the recursion.

// Even-split workload under k*T*N pricing: the cost is invariant in N, so
// every count up to the cap is defensible.
OptimalSet even_split_optimal_set(double t1, double k, int n_cap);

// Power-law running time under k*T*N pricing with a hard-deadline step
// utility at `cutoff`: the set ends at the least count whose running time
// meets the cutoff. Requires alpha < 1 or t_inf > 0 (otherwise the cost is
// flat and the cutoff never binds).
OptimalSet step_cutoff_optimal_set(double k, double t1, double t_inf,
                                   double alpha, double cutoff, int n_cap);

// Usage-independent flat pricing: any utility accepts any speedup, so the
// set runs to the saturation point (or the cap / table end).
OptimalSet flat_price_optimal_set(const RunningTimeModel& rt, int n_cap);

// Parameters of the constant-utility power-law family: running time
// (t1 - t_inf)/N^alpha + t_inf with alpha < 1, pricing k*T*N, and a constant
// marginal utility a.
struct PlateauParams {
  double k;
  double a;
  double alpha;
  double t1;
  double t_inf;
};

// Largest member of the optimal set for PlateauParams. The set is the prefix
// {0..plateau}: the per-step preference condition reduces to comparing
// f(N) = (k*N + a) * T(N), which is strictly convex below a/k * alpha/(1-alpha)
// and increasing beyond, so the boundary is located by bisection on f'.
int constant_utility_plateau(const PlateauParams& p);

// The indifference utility for power-law running times under k*T*N pricing:
// with this U every processor count sits exactly on the preference boundary,
// making the whole range defensible. Defined on (t_inf, t1]; proportional to
// the inverse running-time curve N(t) when t_inf = 0.
class ThresholdUtility {
 public:
  ThresholdUtility(double k, double alpha, double t1, double t_inf);

  // U(t). Throws std::domain_error outside (t_inf, t1].
  double operator()(double t) const;

  // N(t): processor count at which the running time equals t.
  double processor_curve(double t) const;

  // Piecewise-constant sampling on a uniform grid over (t_inf, t1], for
  // contexts that require a UtilityModel value.
  UtilityModel to_piecewise(int cells = 1024) const;

  double k() const { return k_; }
  double alpha() const { return alpha_; }
  double t1() const { return t1_; }
  double t_inf() const { return t_inf_; }

 private:
  double k_;
  double alpha_;
  double t1_;
  double t_inf_;
};

}  // namespace medalloc

#endif  // MEDALLOC_OPTIMAL_SET_HPP_
