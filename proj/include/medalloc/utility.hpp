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

#ifndef MEDALLOC_UTILITY_HPP_
#define MEDALLOC_UTILITY_HPP_

#include <variant>
#include <vector>

#include "medalloc/ext_money.hpp"

namespace medalloc {

struct UtilityBreakpoint {
  double t_start;  // segment start time; the level holds until the next start
  double level;    // money per unit time, >= 0
};

struct UtilityImpulse {
  double location;  // running time at which the impulse sits
  double mass;      // money, >= 0
};

// U(t): the user's marginal willingness to pay (money per unit of running
// time) when the job would otherwise finish at time t. The definite integral
// of U between two running times bounds the extra cost the user accepts for
// the speedup, so integral() is the workhorse here and is exact in closed
// form for every variant.
class UtilityModel {
 public:
  enum class Kind { kConstant, kStepToInfinity, kPiecewiseConstant, kImpulseTrain };

  static UtilityModel constant(double level);
  // U(t) = 0 for t <= threshold, infinite beyond: a hard deadline at
  // `threshold` that no price may violate.
  static UtilityModel step_to_infinity(double threshold);
  // Breakpoints must have strictly increasing t_start; the level before the
  // first breakpoint is 0 and the last level extends to infinity.
  static UtilityModel piecewise_constant(std::vector<UtilityBreakpoint> breakpoints);
  // Impulse locations must be strictly increasing.
  static UtilityModel impulse_train(std::vector<UtilityImpulse> impulses);

  Kind kind() const;

  // Integral of U over [a, b], closed at both ends; an impulse sitting
  // exactly on a bound is included. b may be +infinity (the no-execution
  // baseline integrates to the model's tail mass). Throws std::domain_error
  // when a < 0 or a > b.
  ExtMoney integral(double a, double b) const;

  // Impulse mass located exactly at t; zero for continuous variants.
  ExtMoney mass_at(double t) const;

  double constant_level() const;
  double step_threshold() const;
  const std::vector<UtilityBreakpoint>& breakpoints() const;
  const std::vector<UtilityImpulse>& impulses() const;

 private:
  struct Constant {
    double level;
  };
  struct StepToInfinity {
    double threshold;
  };
  struct PiecewiseConstant {
    std::vector<UtilityBreakpoint> breakpoints;
  };
  struct ImpulseTrain {
    std::vector<UtilityImpulse> impulses;
  };

  using Impl =
      std::variant<Constant, StepToInfinity, PiecewiseConstant, ImpulseTrain>;

  explicit UtilityModel(Impl impl) : impl_(std::move(impl)) {}

  Impl impl_;
};

}  // namespace medalloc

#endif  // MEDALLOC_UTILITY_HPP_
