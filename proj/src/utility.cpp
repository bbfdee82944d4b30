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

#include "medalloc/utility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace medalloc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_nonneg_finite(double v, const char* what) {
  if (std::isnan(v) || v < 0.0 || v == kInf) {
    throw std::invalid_argument(std::string("UtilityModel: ") + what +
                                " must be finite and nonnegative");
  }
}

void check_bounds(double a, double b) {
  if (std::isnan(a) || std::isnan(b) || a < 0.0) {
    throw std::domain_error("UtilityModel: integral bounds must satisfy 0 <= a");
  }
  if (a > b) {
    throw std::domain_error("UtilityModel: integral requires a <= b");
  }
}

}  // namespace

UtilityModel UtilityModel::constant(double level) {
  check_nonneg_finite(level, "constant level");
  return UtilityModel(Constant{level});
}

UtilityModel UtilityModel::step_to_infinity(double threshold) {
  check_nonneg_finite(threshold, "step threshold");
  return UtilityModel(StepToInfinity{threshold});
}

UtilityModel UtilityModel::piecewise_constant(
    std::vector<UtilityBreakpoint> breakpoints) {
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    check_nonneg_finite(breakpoints[i].level, "breakpoint level");
    if (std::isnan(breakpoints[i].t_start) || breakpoints[i].t_start < 0.0 ||
        breakpoints[i].t_start == kInf) {
      throw std::invalid_argument(
          "UtilityModel: breakpoint start must be finite and nonnegative");
    }
    if (i > 0 && breakpoints[i].t_start <= breakpoints[i - 1].t_start) {
      throw std::invalid_argument(
          "UtilityModel: breakpoint starts must be strictly increasing");
    }
  }
  return UtilityModel(PiecewiseConstant{std::move(breakpoints)});
}

UtilityModel UtilityModel::impulse_train(std::vector<UtilityImpulse> impulses) {
  for (std::size_t i = 0; i < impulses.size(); ++i) {
    check_nonneg_finite(impulses[i].mass, "impulse mass");
    if (std::isnan(impulses[i].location) || impulses[i].location < 0.0 ||
        impulses[i].location == kInf) {
      throw std::invalid_argument(
          "UtilityModel: impulse location must be finite and nonnegative");
    }
    if (i > 0 && impulses[i].location <= impulses[i - 1].location) {
      throw std::invalid_argument(
          "UtilityModel: impulse locations must be strictly increasing");
    }
  }
  return UtilityModel(ImpulseTrain{std::move(impulses)});
}

UtilityModel::Kind UtilityModel::kind() const {
  switch (impl_.index()) {
    case 0:
      return Kind::kConstant;
    case 1:
      return Kind::kStepToInfinity;
    case 2:
      return Kind::kPiecewiseConstant;
    default:
      return Kind::kImpulseTrain;
  }
}

ExtMoney UtilityModel::integral(double a, double b) const {
  check_bounds(a, b);

  if (const auto* c = std::get_if<Constant>(&impl_)) {
    if (c->level == 0.0 || a == b) return ExtMoney(0.0);
    if (b == kInf) return ExtMoney::inf();
    return ExtMoney(c->level * (b - a));
  }

  if (const auto* s = std::get_if<StepToInfinity>(&impl_)) {
    // (a, b] meets (threshold, inf) exactly when b exceeds both a and the
    // threshold.
    return (b > s->threshold && b > a) ? ExtMoney::inf() : ExtMoney(0.0);
  }

  if (const auto* pw = std::get_if<PiecewiseConstant>(&impl_)) {
    const auto& bps = pw->breakpoints;
    double total = 0.0;
    for (std::size_t i = 0; i < bps.size(); ++i) {
      const double level = bps[i].level;
      if (level == 0.0) continue;
      const double seg_start = bps[i].t_start;
      const double seg_end = (i + 1 < bps.size()) ? bps[i + 1].t_start : kInf;
      const double lo = std::max(a, seg_start);
      const double hi = std::min(b, seg_end);
      if (hi <= lo) continue;
      if (hi == kInf) return ExtMoney::inf();
      total += level * (hi - lo);
    }
    return ExtMoney(total);
  }

  const auto& train = std::get<ImpulseTrain>(impl_);
  double total = 0.0;
  for (const auto& imp : train.impulses) {
    if (imp.location >= a && imp.location <= b) total += imp.mass;
  }
  return ExtMoney(total);
}

ExtMoney UtilityModel::mass_at(double t) const {
  if (const auto* train = std::get_if<ImpulseTrain>(&impl_)) {
    for (const auto& imp : train->impulses) {
      if (imp.location == t) return ExtMoney(imp.mass);
    }
  }
  return ExtMoney(0.0);
}

double UtilityModel::constant_level() const {
  if (const auto* c = std::get_if<Constant>(&impl_)) return c->level;
  throw std::logic_error("UtilityModel: constant_level() on a non-constant model");
}

double UtilityModel::step_threshold() const {
  if (const auto* s = std::get_if<StepToInfinity>(&impl_)) return s->threshold;
  throw std::logic_error("UtilityModel: step_threshold() on a non-step model");
}

const std::vector<UtilityBreakpoint>& UtilityModel::breakpoints() const {
  if (const auto* pw = std::get_if<PiecewiseConstant>(&impl_)) {
    return pw->breakpoints;
  }
  throw std::logic_error("UtilityModel: breakpoints() on a non-piecewise model");
}

const std::vector<UtilityImpulse>& UtilityModel::impulses() const {
  if (const auto* train = std::get_if<ImpulseTrain>(&impl_)) {
    return train->impulses;
  }
  throw std::logic_error("UtilityModel: impulses() on a non-impulse model");
}

}  // namespace medalloc
