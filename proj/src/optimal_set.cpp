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

#include "medalloc/optimal_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace medalloc {

namespace {

OptimalSet make_prefix(int max_member, int n_cap) {
  OptimalSet set;
  set.n_cap = n_cap;
  set.members.resize(static_cast<std::size_t>(max_member) + 1);
  for (int i = 0; i <= max_member; ++i) {
    set.members[static_cast<std::size_t>(i)] = i;
  }
  return set;
}

// Candidates beyond the saturation point are never preferable, and a table
// is never evaluated past its last index.
int exploration_cap(const Job& job, int n_max) {
  int cap = n_max;
  if (auto limit = job.rt.domain_limit(); limit && *limit < cap) cap = *limit;
  if (cap >= 1) {
    if (auto sat = job.rt.saturation_point(cap); sat && *sat < cap) cap = *sat;
  }
  return cap;
}

void check_cap(int n_cap) {
  if (n_cap < 1) throw std::domain_error("optimal_set: n_cap must be >= 1");
}

}  // namespace

bool OptimalSet::contains(int n) const {
  return std::binary_search(members.begin(), members.end(), n);
}

bool OptimalSet::is_prefix() const {
  return members.back() + 1 == static_cast<int>(members.size());
}

int optimal_n(const Job& job, const CoIModel& coi, int n_max) {
  if (n_max < 0) throw std::domain_error("optimal_n: n_max must be >= 0");
  int incumbent = 0;
  const int cap = exploration_cap(job, n_max);
  for (int m = 1; m <= cap; ++m) {
    if (prefers(job, coi, incumbent, m)) incumbent = m;
  }
  return incumbent;
}

OptimalSet optimal_set(const Job& job, const CoIModel& coi, int n_cap) {
  check_cap(n_cap);
  OptimalSet set;
  set.n_cap = n_cap;
  set.members.push_back(0);
  int incumbent = 0;
  const int cap = exploration_cap(job, n_cap);
  for (int m = 1; m <= cap; ++m) {
    if (prefers(job, coi, incumbent, m)) {
      incumbent = m;
      set.members.push_back(m);
    }
  }
  return set;
}

OptimalSet even_split_optimal_set(double t1, double k, int n_cap) {
  check_cap(n_cap);
  RunningTimeModel::even_split(t1);  // validate
  CoIModel::linear_ktn(k);           // validate
  return make_prefix(n_cap, n_cap);
}

OptimalSet step_cutoff_optimal_set(double k, double t1, double t_inf,
                                   double alpha, double cutoff, int n_cap) {
  check_cap(n_cap);
  CoIModel::linear_ktn(k);  // validate
  const RunningTimeModel rt = RunningTimeModel::power_law(t1, t_inf, alpha);
  if (alpha >= 1.0 && t_inf <= 0.0) {
    throw std::domain_error(
        "step_cutoff_optimal_set: requires alpha < 1 or t_inf > 0");
  }
  if (std::isnan(cutoff) || cutoff < 0.0) {
    throw std::domain_error("step_cutoff_optimal_set: cutoff must be >= 0");
  }
  // The least count meeting the cutoff ends the set; past it the cost rises
  // strictly and the deadline adds nothing.
  for (int n = 1; n <= n_cap; ++n) {
    if (rt.eval(n) <= cutoff) return make_prefix(n, n_cap);
  }
  return make_prefix(n_cap, n_cap);
}

OptimalSet flat_price_optimal_set(const RunningTimeModel& rt, int n_cap) {
  check_cap(n_cap);
  int bound = n_cap;
  if (auto limit = rt.domain_limit(); limit && *limit < bound) bound = *limit;
  if (auto sat = rt.saturation_point(bound); sat && *sat < bound) bound = *sat;
  return make_prefix(bound, n_cap);
}

namespace {

void check_plateau_params(const PlateauParams& p) {
  if (!(p.k > 0.0) || !(p.a > 0.0) || !std::isfinite(p.k) ||
      !std::isfinite(p.a)) {
    throw std::invalid_argument(
        "PlateauParams: k and a must be positive and finite");
  }
  if (!(p.alpha > 0.0) || !(p.alpha < 1.0)) {
    throw std::invalid_argument("PlateauParams: requires 0 < alpha < 1");
  }
  if (std::isnan(p.t_inf) || p.t_inf < 0.0 || p.t_inf >= p.t1 ||
      !std::isfinite(p.t1)) {
    throw std::invalid_argument("PlateauParams: requires t1 > t_inf >= 0");
  }
}

long double plateau_objective(const PlateauParams& p, long double n) {
  const long double span = static_cast<long double>(p.t1) - p.t_inf;
  const long double t = span / std::pow(n, static_cast<long double>(p.alpha)) +
                        static_cast<long double>(p.t_inf);
  return (static_cast<long double>(p.k) * n + p.a) * t;
}

long double plateau_slope(const PlateauParams& p, long double n) {
  const long double span = static_cast<long double>(p.t1) - p.t_inf;
  const long double alpha = static_cast<long double>(p.alpha);
  const long double dt = -alpha * span * std::pow(n, -alpha - 1.0L);
  return static_cast<long double>(p.k) * p.t_inf -
         dt * (static_cast<long double>(p.k) * n * (1.0L / alpha - 1.0L) -
               static_cast<long double>(p.a));
}

}  // namespace

int constant_utility_plateau(const PlateauParams& p) {
  check_plateau_params(p);

  // The slope of f(N) = (kN + a) T(N) has at most one zero, inside
  // [1, a/k * alpha/(1-alpha)]; f is convex there and increasing beyond.
  const long double upper = static_cast<long double>(p.a) / p.k *
                            (static_cast<long double>(p.alpha) / (1.0L - p.alpha));
  long double n0 = 1.0L;
  if (upper > 1.0L && plateau_slope(p, 1.0L) < 0.0L) {
    long double lo = 1.0L;
    long double hi = upper;
    // Modest precision suffices: the root only feeds a ceiling.
    for (int iter = 0; iter < 200 && hi - lo >= 1e-9L; ++iter) {
      const long double mid = 0.5L * (lo + hi);
      if (plateau_slope(p, mid) <= 0.0L) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    n0 = 0.5L * (lo + hi);
  }

  const long double ceil_n0 = std::ceil(n0);
  if (ceil_n0 > static_cast<long double>(std::numeric_limits<int>::max())) {
    throw std::domain_error("constant_utility_plateau: plateau exceeds int range");
  }
  const int n_prime = std::max(static_cast<int>(ceil_n0) - 1, 1);
  const bool step_up =
      plateau_objective(p, static_cast<long double>(n_prime) + 1.0L) <=
      plateau_objective(p, static_cast<long double>(n_prime));
  return step_up ? n_prime + 1 : n_prime;
}

ThresholdUtility::ThresholdUtility(double k, double alpha, double t1,
                                   double t_inf)
    : k_(k), alpha_(alpha), t1_(t1), t_inf_(t_inf) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("ThresholdUtility: k must be positive");
  }
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("ThresholdUtility: requires 0 < alpha <= 1");
  }
  if (std::isnan(t_inf) || t_inf < 0.0 || t_inf >= t1 || !std::isfinite(t1)) {
    throw std::invalid_argument("ThresholdUtility: requires t1 > t_inf >= 0");
  }
}

double ThresholdUtility::processor_curve(double t) const {
  if (!(t > t_inf_) || t > t1_) {
    throw std::domain_error("ThresholdUtility: t must lie in (t_inf, t1]");
  }
  return std::pow((t - t_inf_) / (t1_ - t_inf_), -1.0 / alpha_);
}

double ThresholdUtility::operator()(double t) const {
  if (!(t > t_inf_) || t > t1_) {
    throw std::domain_error("ThresholdUtility: t must lie in (t_inf, t1]");
  }
  const double span = t1_ - t_inf_;
  const double x = (t - t_inf_) / span;
  // -k (N(t) + t N'(t)) in closed form.
  return k_ * std::pow(x, -1.0 / alpha_ - 1.0) *
         (t * (1.0 - alpha_) + alpha_ * t_inf_) / (alpha_ * span);
}

UtilityModel ThresholdUtility::to_piecewise(int cells) const {
  if (cells < 1) {
    throw std::invalid_argument("ThresholdUtility: cells must be >= 1");
  }
  const double span = t1_ - t_inf_;
  std::vector<UtilityBreakpoint> breakpoints;
  breakpoints.reserve(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i < cells; ++i) {
    const double start = t_inf_ + span * i / cells;
    const double mid = t_inf_ + span * (i + 0.5) / cells;
    breakpoints.push_back({start, (*this)(mid)});
  }
  breakpoints.push_back({t1_, 0.0});
  return UtilityModel::piecewise_constant(std::move(breakpoints));
}

}  // namespace medalloc
