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

#ifndef TRUNCLIM_ERRORS_HPP_
#define TRUNCLIM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace trunclim {

// A numeric routine (quadrature, cumulative table construction, ...) ran out
// of refinement budget before reaching its tolerance. Carries the error
// estimate that was actually achieved.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// A constructive enumeration (bracket cover, entropy grid) exceeded its size
// budget. partial_value holds whatever partial result was computed.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what, double partial_value = 0.0)
      : std::runtime_error(what), partial_value_(partial_value) {}
  double partial_value() const noexcept { return partial_value_; }

 private:
  double partial_value_;
};

// Rejection sampling exhausted its attempt budget (pathologically small
// acceptance probability).
class SamplingBudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that needs at least one observation received none.
class EmptySampleError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The influence function was requested at a point where C(y) is below the
// stability floor (observation too close to the upper support boundary).
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double c_value)
      : std::runtime_error(what), c_value_(c_value) {}
  double c_value() const noexcept { return c_value_; }

 private:
  double c_value_;
};

// A model violates the assumption required by the requested operation.
class AssumptionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration / input file problem; carries the offending field when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string field = "")
      : std::runtime_error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A CLT coordinate has zero asymptotic variance (constant phi); it cannot be
// standardized.
class DegenerateCoordinateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trunclim

#endif  // TRUNCLIM_ERRORS_HPP_
