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

#include "medalloc/running_time.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace medalloc {

namespace {

void check_positive_finite(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("RunningTimeModel: ") + what +
                                " must be positive and finite");
  }
}

}  // namespace

RunningTimeModel RunningTimeModel::even_split(double t1) {
  check_positive_finite(t1, "t1");
  return RunningTimeModel(EvenSplit{t1});
}

RunningTimeModel RunningTimeModel::power_law(double t1, double t_inf,
                                             double alpha) {
  check_positive_finite(t1, "t1");
  if (std::isnan(t_inf) || t_inf < 0.0 || t_inf >= t1) {
    throw std::invalid_argument(
        "RunningTimeModel: power law requires t1 > t_inf >= 0");
  }
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument(
        "RunningTimeModel: power law requires 0 < alpha <= 1");
  }
  return RunningTimeModel(PowerLaw{t1, t_inf, alpha});
}

RunningTimeModel RunningTimeModel::table(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("RunningTimeModel: table must be non-empty");
  }
  for (double v : values) check_positive_finite(v, "table value");

  // Strictly decreasing up to the saturation index, nondecreasing beyond;
  // no other shape is compatible with a saturation point.
  std::size_t s = 1;
  while (s < values.size() && values[s] < values[s - 1]) ++s;
  for (std::size_t i = s; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      throw std::invalid_argument(
          "RunningTimeModel: table must be strictly decreasing up to its "
          "saturation index and nondecreasing beyond it");
    }
  }
  // Speedup can never exceed the processor count.
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[0] / static_cast<double>(i + 1)) {
      throw std::invalid_argument(
          "RunningTimeModel: table violates T(n) >= T(1)/n at n = " +
          std::to_string(i + 1));
    }
  }
  return RunningTimeModel(Table{std::move(values)});
}

RunningTimeModel::Kind RunningTimeModel::kind() const {
  if (std::holds_alternative<EvenSplit>(impl_)) return Kind::kEvenSplit;
  if (std::holds_alternative<PowerLaw>(impl_)) return Kind::kPowerLaw;
  return Kind::kTable;
}

long double RunningTimeModel::eval_ext(int n) const {
  if (n < 1) {
    throw std::domain_error("RunningTimeModel: processor count must be >= 1");
  }
  if (const auto* es = std::get_if<EvenSplit>(&impl_)) {
    return static_cast<long double>(es->t1) / n;
  }
  if (const auto* pl = std::get_if<PowerLaw>(&impl_)) {
    const long double span =
        static_cast<long double>(pl->t1) - static_cast<long double>(pl->t_inf);
    return span / std::pow(static_cast<long double>(n),
                           static_cast<long double>(pl->alpha)) +
           static_cast<long double>(pl->t_inf);
  }
  const auto& tab = std::get<Table>(impl_);
  if (static_cast<std::size_t>(n) > tab.values.size()) {
    throw std::domain_error(
        "RunningTimeModel: n = " + std::to_string(n) +
        " is beyond the table domain (no extrapolation past index " +
        std::to_string(tab.values.size()) + ")");
  }
  return static_cast<long double>(tab.values[static_cast<std::size_t>(n) - 1]);
}

double RunningTimeModel::eval(int n) const {
  return static_cast<double>(eval_ext(n));
}

std::optional<int> RunningTimeModel::saturation_point(int n_cap) const {
  if (n_cap < 1) {
    throw std::domain_error("RunningTimeModel: n_cap must be >= 1");
  }
  const auto* tab = std::get_if<Table>(&impl_);
  if (tab == nullptr) return std::nullopt;  // strictly decreasing forever
  const int last = static_cast<int>(tab->values.size()) - 1;
  const int bound = std::min(n_cap, last);
  for (int s = 1; s <= bound; ++s) {
    if (tab->values[static_cast<std::size_t>(s) - 1] <=
        tab->values[static_cast<std::size_t>(s)]) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<int> RunningTimeModel::domain_limit() const {
  if (const auto* tab = std::get_if<Table>(&impl_)) {
    return static_cast<int>(tab->values.size());
  }
  return std::nullopt;
}

double RunningTimeModel::t1() const {
  if (const auto* es = std::get_if<EvenSplit>(&impl_)) return es->t1;
  if (const auto* pl = std::get_if<PowerLaw>(&impl_)) return pl->t1;
  throw std::logic_error("RunningTimeModel: t1() on a table model");
}

double RunningTimeModel::t_inf() const {
  if (const auto* pl = std::get_if<PowerLaw>(&impl_)) return pl->t_inf;
  throw std::logic_error("RunningTimeModel: t_inf() on a non-power-law model");
}

double RunningTimeModel::alpha() const {
  if (const auto* pl = std::get_if<PowerLaw>(&impl_)) return pl->alpha;
  throw std::logic_error("RunningTimeModel: alpha() on a non-power-law model");
}

const std::vector<double>& RunningTimeModel::values() const {
  if (const auto* tab = std::get_if<Table>(&impl_)) return tab->values;
  throw std::logic_error("RunningTimeModel: values() on a non-table model");
}

}  // namespace medalloc
