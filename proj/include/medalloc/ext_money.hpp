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

#ifndef MEDALLOC_EXT_MONEY_HPP_
#define MEDALLOC_EXT_MONEY_HPP_

#include <cmath>
#include <compare>
#include <iosfwd>
#include <limits>
#include <stdexcept>

namespace medalloc {

// Nonnegative money amount extended with +infinity. Infinite amounts arise
// from step utilities integrated across their threshold and from the
// undefined regions of grid pricing surfaces; they must order above every
// finite amount and absorb addition.
class ExtMoney {
 public:
  ExtMoney() = default;

  ExtMoney(double amount) : amount_(amount) {
    if (std::isnan(amount) || amount < 0.0) {
      throw std::invalid_argument(
          "ExtMoney: amount must be nonnegative or infinite");
    }
  }

  static ExtMoney inf() {
    ExtMoney m;
    m.amount_ = std::numeric_limits<double>::infinity();
    return m;
  }

  bool is_inf() const {
    return amount_ == std::numeric_limits<double>::infinity();
  }
  bool is_finite() const { return !is_inf(); }

  // Finite value, or +inf as an IEEE double.
  double amount() const { return amount_; }

  ExtMoney& operator+=(ExtMoney other) {
    amount_ += other.amount_;
    return *this;
  }

  friend ExtMoney operator+(ExtMoney a, ExtMoney b) { return a += b; }

  friend bool operator==(const ExtMoney&, const ExtMoney&) = default;
  friend auto operator<=>(const ExtMoney&, const ExtMoney&) = default;

 private:
  double amount_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const ExtMoney& m);

}  // namespace medalloc

#endif  // MEDALLOC_EXT_MONEY_HPP_
