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

#ifndef MEDALLOC_TESTS_SUPPORT_QUADRATURE_HPP_
#define MEDALLOC_TESTS_SUPPORT_QUADRATURE_HPP_

#include <cmath>

namespace medalloc::testsupport {

// Adaptive Simpson quadrature; independent of any closed-form integral in
// the library, so it can serve as an oracle against them.
template <typename F>
double simpson_slice(const F& f, double a, double b, double fa, double fm,
                     double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double integrate_rec(const F& f, double a, double b, double fa, double fm,
                     double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_slice(f, a, m, fa, flm, fm);
  const double right = simpson_slice(f, m, b, fm, frm, fb);
  if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return integrate_rec(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         integrate_rec(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double integrate(const F& f, double a, double b, double tol = 1e-11) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson_slice(f, a, b, fa, fm, fb);
  return integrate_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace medalloc::testsupport

#endif  // MEDALLOC_TESTS_SUPPORT_QUADRATURE_HPP_
