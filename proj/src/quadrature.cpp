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

#include "trunclim/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "trunclim/errors.hpp"

namespace trunclim {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Cell {
  double lo;
  double hi;
  double value;
  double error;
};

struct CellWorse {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;  // deterministic tie-break
  }
};

bool finite(double x) { return std::isfinite(x); }

}  // namespace

QuadratureResult gauss_kronrod_panel(const std::function<double(double)>& fn,
                                     double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  double kronrod = 0.0;
  double gauss = 0.0;
  double resabs = 0.0;
  for (int j = 0; j < 8; ++j) {
    const double offset = half * kKronrodNodes[j];
    double fsum;
    if (j == 7) {
      fsum = fn(center);
    } else {
      fsum = fn(center - offset) + fn(center + offset);
    }
    if (!finite(fsum)) {
      // A non-finite sample poisons the panel; report infinite error so the
      // adaptive driver keeps refining away from the singular point.
      QuadratureResult bad;
      bad.value = 0.0;
      bad.error_estimate = std::numeric_limits<double>::infinity();
      bad.intervals = 1;
      return bad;
    }
    kronrod += kKronrodWeights[j] * fsum;
    resabs += kKronrodWeights[j] * std::abs(fsum);
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * fsum;
  }

  QuadratureResult out;
  out.value = kronrod * half;
  out.intervals = 1;
  const double diff = std::abs((kronrod - gauss) * half);
  // QUADPACK-style magnification: (200*diff)^1.5 capped by the crude bound.
  double err = diff;
  const double scale = resabs * std::abs(half);
  if (scale > 0.0 && diff > 0.0) {
    err = std::min(scale, std::pow(200.0 * diff / scale, 1.5) * scale);
    err = std::max(err, diff);
  }
  out.error_estimate = err;
  out.converged = true;
  return out;
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& fn,
                                    double lo, double hi,
                                    const QuadratureOptions& options) {
  if (lo == hi) return {0.0, 0.0, 0, true};
  double sign = 1.0;
  if (lo > hi) {
    std::swap(lo, hi);
    sign = -1.0;
  }

  // Map infinite endpoints onto a bounded parameter.
  std::function<double(double)> g = fn;
  double a = lo;
  double b = hi;
  std::vector<double> splits = options.split_points;
  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  if (lo_inf && hi_inf) {
    g = [&fn](double t) {
      const double den = 1.0 - t * t;
      const double x = t / den;
      return fn(x) * (1.0 + t * t) / (den * den);
    };
    a = -1.0;
    b = 1.0;
    // The inverse map t(x) solves x = t/(1-t^2).
    for (auto& s : splits) {
      if (s == 0.0) continue;
      s = (std::sqrt(1.0 + 4.0 * s * s) - 1.0) / (2.0 * s);
    }
  } else if (hi_inf) {
    const double base = lo;
    g = [&fn, base](double t) {
      const double om = 1.0 - t;
      return fn(base + t / om) / (om * om);
    };
    a = 0.0;
    b = 1.0;
    for (auto& s : splits) {
      const double u = s - base;
      s = (u <= 0.0) ? 0.0 : u / (1.0 + u);
    }
  } else if (lo_inf) {
    const double base = hi;
    g = [&fn, base](double t) {
      const double om = 1.0 - t;
      return fn(base - t / om) / (om * om);
    };
    a = 0.0;
    b = 1.0;
    for (auto& s : splits) {
      const double u = base - s;
      s = (u <= 0.0) ? 0.0 : u / (1.0 + u);
    }
    sign = -sign;
  }

  // Initial partition: endpoints plus interior split points.
  std::vector<double> knots;
  knots.push_back(a);
  for (double s : splits) {
    if (s > a && s < b) knots.push_back(s);
  }
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::priority_queue<Cell, std::vector<Cell>, CellWorse> cells;
  double total = 0.0;
  double total_err = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    auto r = gauss_kronrod_panel(g, knots[i], knots[i + 1]);
    cells.push({knots[i], knots[i + 1], r.value, r.error_estimate});
    total += r.value;
    total_err += r.error_estimate;
    ++count;
  }

  const double tol = options.abs_tolerance;
  while (total_err > tol && count < options.max_intervals) {
    Cell worst = cells.top();
    cells.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval at floating-point resolution; cannot refine further.
      cells.push(worst);
      break;
    }
    auto left = gauss_kronrod_panel(g, worst.lo, mid);
    auto right = gauss_kronrod_panel(g, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error_estimate + right.error_estimate - worst.error;
    cells.push({worst.lo, mid, left.value, left.error_estimate});
    cells.push({mid, worst.hi, right.value, right.error_estimate});
    ++count;
  }

  // Recompute the sums in a deterministic order to shed the accumulated
  // cancellation from incremental updates.
  std::vector<Cell> all;
  all.reserve(cells.size());
  while (!cells.empty()) {
    all.push_back(cells.top());
    cells.pop();
  }
  std::sort(all.begin(), all.end(),
            [](const Cell& x, const Cell& y) { return x.lo < y.lo; });
  total = 0.0;
  total_err = 0.0;
  for (const auto& c : all) {
    total += c.value;
    total_err += c.error;
  }

  QuadratureResult out;
  out.value = sign * total;
  out.error_estimate = total_err;
  out.intervals = count;
  out.converged = total_err <= tol;
  return out;
}

double integrate(const std::function<double(double)>& fn, double lo,
                 double hi, double abs_tolerance,
                 const std::vector<double>& split_points) {
  QuadratureOptions options;
  options.abs_tolerance = abs_tolerance;
  options.split_points = split_points;
  auto r = integrate_adaptive(fn, lo, hi, options);
  if (!r.converged) {
    throw NumericalError(
        "quadrature did not reach tolerance after refinement budget",
        r.error_estimate);
  }
  return r.value;
}

}  // namespace trunclim
