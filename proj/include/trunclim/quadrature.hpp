/*
   Copyright 2026 The trunclim Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRUNCLIM_QUADRATURE_HPP_
#define TRUNCLIM_QUADRATURE_HPP_

#include <cstddef>
#include <functional>
#include <vector>

namespace trunclim {

struct QuadratureOptions {
  double abs_tolerance = 1e-9;
  // Hard cap on the number of subintervals before giving up.
  std::size_t max_intervals = 20000;
  // Known kinks / jumps of the integrand; the initial partition splits here.
  std::vector<double> split_points{};
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t intervals = 0;
  bool converged = false;
};

// Single Gauss-Kronrod 7-15 panel on [lo, hi]. The error estimate is the
// usual QUADPACK magnification of |K15 - G7|.
QuadratureResult gauss_kronrod_panel(const std::function<double(double)>& fn,
                                     double lo, double hi);

// Globally adaptive Gauss-Kronrod integration of fn over (lo, hi).
// Infinite endpoints are mapped onto a bounded parameter through rational
// substitutions. Never throws; inspect `converged`.
QuadratureResult integrate_adaptive(const std::function<double(double)>& fn,
                                    double lo, double hi,
                                    const QuadratureOptions& options = {});

// Convenience wrapper that throws NumericalError (carrying the achieved
// error estimate) when the refinement budget is exhausted.
double integrate(const std::function<double(double)>& fn, double lo,
                 double hi, double abs_tolerance = 1e-9,
                 const std::vector<double>& split_points = {});

}  // namespace trunclim

#endif  // TRUNCLIM_QUADRATURE_HPP_
