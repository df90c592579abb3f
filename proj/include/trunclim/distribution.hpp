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

#ifndef TRUNCLIM_DISTRIBUTION_HPP_
#define TRUNCLIM_DISTRIBUTION_HPP_

#include <functional>
#include <string>
#include <vector>

namespace trunclim {

// A continuous law given in closed form: CDF, density, quantile and support
// boundaries. Immutable after construction and cheap to copy.
class ContinuousDistribution {
 public:
  ContinuousDistribution(std::function<double(double)> cdf,
                         std::function<double(double)> pdf,
                         std::function<double(double)> quantile,
                         double support_lo, double support_hi,
                         std::string description,
                         std::vector<double> critical_points = {});

  double cdf(double x) const { return cdf_(x); }
  double pdf(double x) const { return pdf_(x); }

  // p must lie in (0,1); endpoint probabilities map to the support bounds,
  // which may be infinite.
  double quantile(double p) const;

  double support_lo() const { return support_lo_; }
  double support_hi() const { return support_hi_; }
  bool continuous() const { return true; }
  const std::string& description() const { return description_; }

  // Kink locations of the CDF, used as quadrature split points.
  const std::vector<double>& critical_points() const {
    return critical_points_;
  }

 private:
  std::function<double(double)> cdf_;
  std::function<double(double)> pdf_;
  std::function<double(double)> quantile_;
  double support_lo_;
  double support_hi_;
  std::string description_;
  std::vector<double> critical_points_;
};

ContinuousDistribution uniform_distribution(double a, double b);

// Exponential with the given rate, shifted so the support starts at `shift`.
ContinuousDistribution exponential_distribution(double rate,
                                                double shift = 0.0);

ContinuousDistribution weibull_distribution(double shape, double scale,
                                            double shift = 0.0);

// CDF linearly interpolating the points (x[k], p[k]); p must start at 0, end
// at 1 and be strictly increasing wherever it increases. Handy for
// adversarial tests with kinks at chosen locations.
ContinuousDistribution piecewise_linear_distribution(std::vector<double> x,
                                                     std::vector<double> p);

}  // namespace trunclim

#endif  // TRUNCLIM_DISTRIBUTION_HPP_
