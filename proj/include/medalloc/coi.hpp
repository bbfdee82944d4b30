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

#ifndef MEDALLOC_COI_HPP_
#define MEDALLOC_COI_HPP_

#include <variant>
#include <vector>

#include "medalloc/ext_money.hpp"

namespace medalloc {

// One sampled point of a grid pricing surface.
struct GridSample {
  double t;        // running time
  int n;           // processor count, >= 1
  ExtMoney value;  // price, possibly infinite
};

// CoI(T, N): the provider's cost-of-infrastructure surface, mapping a
// running time and a processor count to a price. Every model satisfies the
// domination property
//
//   T1 <= T2 and N1 <= N2  implies  CoI(T1, N1) <= CoI(T2, N2),
//
// i.e. the surface is jointly monotone; grid construction verifies this on
// all sample pairs and rejects violations.
//
// Grid evaluation semantics: an exact sample returns its value; a query
// strictly between two samples of the same processor row returns the upper
// sample's value; everywhere else the surface is 0 when some finite sample
// lies weakly above-and-right of the query (larger-or-equal time and
// processor count) and infinite otherwise.
class CoIModel {
 public:
  enum class Kind { kLinearKtn, kConstantPrice, kGrid };

  // CoI(T, N) = k * T * N.
  static CoIModel linear_ktn(double k);
  // CoI(T, N) = amount, regardless of usage.
  static CoIModel constant_price(double amount);
  static CoIModel grid(std::vector<GridSample> samples);

  Kind kind() const;

  // Price at (t, n). Throws std::domain_error for t <= 0 or n < 1.
  ExtMoney eval(double t, int n) const;

  // Extended-precision evaluation for the cost pipeline; returns +infinity
  // as a long double for infinite cells.
  long double eval_ext(long double t, int n) const;

  // The same surface with every finite price multiplied by factor > 0.
  // Pricing feedback scales the surface through this.
  CoIModel scaled(double factor) const;

  double k() const;
  double flat_amount() const;
  const std::vector<GridSample>& samples() const;

 private:
  struct LinearKtn {
    double k;
  };
  struct ConstantPrice {
    double amount;
  };
  struct Grid {
    std::vector<GridSample> samples;  // sorted by (n, t)
  };

  using Impl = std::variant<LinearKtn, ConstantPrice, Grid>;

  explicit CoIModel(Impl impl) : impl_(std::move(impl)) {}

  Impl impl_;
};

}  // namespace medalloc

#endif  // MEDALLOC_COI_HPP_
