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

#ifndef MEDALLOC_RUNNING_TIME_HPP_
#define MEDALLOC_RUNNING_TIME_HPP_

#include <optional>
#include <variant>
#include <vector>

namespace medalloc {

// T(N): wall-clock running time of a job on N exclusively held processors.
//
// Three shapes are supported:
//   - even split:  T(N) = t1 / N, a perfectly divisible workload;
//   - power law:   T(N) = (t1 - t_inf) / N^alpha + t_inf with 0 < alpha <= 1,
//                  the bounded-speedup generalization;
//   - table:       explicit values T(1)..T(n), strictly decreasing up to the
//                  saturation processor count and nondecreasing afterwards.
//
// Every model obeys T(N) >= T(1) / N: speedup can never exceed the number of
// processors. Construction rejects any parameterization or table that would
// violate this or the saturation shape.
class RunningTimeModel {
 public:
  enum class Kind { kEvenSplit, kPowerLaw, kTable };

  static RunningTimeModel even_split(double t1);
  static RunningTimeModel power_law(double t1, double t_inf, double alpha);
  static RunningTimeModel table(std::vector<double> values);

  Kind kind() const;

  // T(n). Throws std::domain_error for n < 1 or beyond a table's last index;
  // tables are never extrapolated.
  double eval(int n) const;

  // T(n) evaluated without intermediate rounding, for use by the cost
  // pipeline (see job_cost). Same domain rules as eval().
  long double eval_ext(int n) const;

  // Smallest S <= n_cap with T(S) <= T(S+1), or nullopt when T strictly
  // decreases through n_cap (always the case for even-split and power-law).
  std::optional<int> saturation_point(int n_cap) const;

  // Largest evaluable n: the table length, or nullopt when unbounded.
  std::optional<int> domain_limit() const;

  // Parameter accessors; each throws std::logic_error on a kind mismatch.
  double t1() const;
  double t_inf() const;
  double alpha() const;
  const std::vector<double>& values() const;

 private:
  struct EvenSplit {
    double t1;
  };
  struct PowerLaw {
    double t1;
    double t_inf;
    double alpha;
  };
  struct Table {
    std::vector<double> values;
  };

  explicit RunningTimeModel(std::variant<EvenSplit, PowerLaw, Table> impl)
      : impl_(std::move(impl)) {}

  std::variant<EvenSplit, PowerLaw, Table> impl_;
};

}  // namespace medalloc

#endif  // MEDALLOC_RUNNING_TIME_HPP_
