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

#include "medalloc/coi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace medalloc {

namespace {

constexpr long double kInfL = std::numeric_limits<long double>::infinity();

void check_query(long double t, int n) {
  if (!(t > 0.0L)) {
    throw std::domain_error("CoIModel: running time must be positive");
  }
  if (n < 1) {
    throw std::domain_error("CoIModel: processor count must be >= 1");
  }
}

}  // namespace

CoIModel CoIModel::linear_ktn(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("CoIModel: k must be positive and finite");
  }
  return CoIModel(LinearKtn{k});
}

CoIModel CoIModel::constant_price(double amount) {
  if (std::isnan(amount) || amount < 0.0 || !std::isfinite(amount)) {
    throw std::invalid_argument(
        "CoIModel: constant price must be finite and nonnegative");
  }
  return CoIModel(ConstantPrice{amount});
}

CoIModel CoIModel::grid(std::vector<GridSample> samples) {
  for (const auto& s : samples) {
    if (!(s.t > 0.0) || !std::isfinite(s.t)) {
      throw std::invalid_argument(
          "CoIModel: grid sample times must be positive and finite");
    }
    if (s.n < 1) {
      throw std::invalid_argument(
          "CoIModel: grid sample processor counts must be >= 1");
    }
  }
  std::sort(samples.begin(), samples.end(),
            [](const GridSample& a, const GridSample& b) {
              return a.n != b.n ? a.n < b.n : a.t < b.t;
            });
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].n == samples[i - 1].n && samples[i].t == samples[i - 1].t) {
      throw std::invalid_argument("CoIModel: duplicate grid sample point");
    }
  }
  // The domination property must hold on every sample pair.
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (samples[i].t <= samples[j].t && samples[i].n <= samples[j].n &&
          samples[i].value > samples[j].value) {
        throw std::invalid_argument(
            "CoIModel: grid samples violate the domination property at (t=" +
            std::to_string(samples[i].t) +
            ", n=" + std::to_string(samples[i].n) + ") vs (t=" +
            std::to_string(samples[j].t) +
            ", n=" + std::to_string(samples[j].n) + ")");
      }
    }
  }
  return CoIModel(Grid{std::move(samples)});
}

CoIModel::Kind CoIModel::kind() const {
  switch (impl_.index()) {
    case 0:
      return Kind::kLinearKtn;
    case 1:
      return Kind::kConstantPrice;
    default:
      return Kind::kGrid;
  }
}

long double CoIModel::eval_ext(long double t, int n) const {
  check_query(t, n);

  if (const auto* lin = std::get_if<LinearKtn>(&impl_)) {
    return static_cast<long double>(lin->k) * t * n;
  }
  if (const auto* flat = std::get_if<ConstantPrice>(&impl_)) {
    return static_cast<long double>(flat->amount);
  }

  const auto& samples = std::get<Grid>(impl_).samples;

  // Row of samples at this processor count.
  auto row_begin = std::lower_bound(
      samples.begin(), samples.end(), n,
      [](const GridSample& s, int key) { return s.n < key; });
  auto row_end = row_begin;
  while (row_end != samples.end() && row_end->n == n) ++row_end;

  if (row_begin != row_end) {
    auto above = std::lower_bound(
        row_begin, row_end, t, [](const GridSample& s, long double key) {
          return static_cast<long double>(s.t) < key;
        });
    if (above != row_end && static_cast<long double>(above->t) == t) {
      return above->value.is_inf() ? kInfL
                                   : static_cast<long double>(above->value.amount());
    }
    // Strictly between two samples of the row: charge the upper one.
    if (above != row_end && above != row_begin) {
      return above->value.is_inf() ? kInfL
                                   : static_cast<long double>(above->value.amount());
    }
  }

  // Off the sampled rows: free where some finite sample dominates the query,
  // unavailable (infinite) everywhere else.
  for (const auto& s : samples) {
    if (s.value.is_finite() && static_cast<long double>(s.t) >= t && s.n >= n) {
      return 0.0L;
    }
  }
  return kInfL;
}

ExtMoney CoIModel::eval(double t, int n) const {
  const long double v = eval_ext(static_cast<long double>(t), n);
  if (v == kInfL) return ExtMoney::inf();
  return ExtMoney(static_cast<double>(v));
}

CoIModel CoIModel::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw std::invalid_argument("CoIModel: scale factor must be positive");
  }
  if (const auto* lin = std::get_if<LinearKtn>(&impl_)) {
    return linear_ktn(lin->k * factor);
  }
  if (const auto* flat = std::get_if<ConstantPrice>(&impl_)) {
    return constant_price(flat->amount * factor);
  }
  std::vector<GridSample> scaled_samples = std::get<Grid>(impl_).samples;
  for (auto& s : scaled_samples) {
    if (s.value.is_finite()) s.value = ExtMoney(s.value.amount() * factor);
  }
  return grid(std::move(scaled_samples));
}

double CoIModel::k() const {
  if (const auto* lin = std::get_if<LinearKtn>(&impl_)) return lin->k;
  throw std::logic_error("CoIModel: k() on a non-linear model");
}

double CoIModel::flat_amount() const {
  if (const auto* flat = std::get_if<ConstantPrice>(&impl_)) return flat->amount;
  throw std::logic_error("CoIModel: flat_amount() on a non-constant model");
}

const std::vector<GridSample>& CoIModel::samples() const {
  if (const auto* g = std::get_if<Grid>(&impl_)) return g->samples;
  throw std::logic_error("CoIModel: samples() on a non-grid model");
}

}  // namespace medalloc
