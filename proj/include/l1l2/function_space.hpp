#pragma once

// Nonnegative step functions on [0, 1] and the identity
//
//   |f - 1|_2^2 = 2 - 2 |f|_1      for f >= 0, |f|_2 = 1,
//
// obtained from the parallelogram law |f - 1|^2 + |f + 1|^2 = 4.
// All integrals are exact sums over the cells.

#include <utility>
#include <vector>

#include "l1l2/field.hpp"

namespace l1l2 {

class StepFunction {
 public:
  /// `breakpoints` must run 0 = t_0 < t_1 < ... < t_m = 1 and `values` hold the
  /// m nonnegative cell values on [t_{k-1}, t_k). Throws Domain otherwise.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  /// m equal cells.
  static StepFunction uniform(std::vector<double> values);

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t cells() const noexcept { return values_.size(); }
  double width(std::size_t k) const { return breakpoints_[k + 1] - breakpoints_[k]; }

  /// f / |f|_2. Throws Normalization for f == 0.
  StepFunction normalized() const;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// p must be 1 or 2; throws Domain otherwise.
double lp_norm(const StepFunction& f, int p);

inline constexpr double kUnitNormTolerance = 1e-9;

/// c = |f - 1|_2^2 by direct integration. Throws Normalization unless
/// | |f|_2 - 1 | <= kUnitNormTolerance.
double peakiness(const StepFunction& f);

struct ParallelogramCheck {
  double lhs;  // 4
  double rhs;  // |f - 1|_2^2 + |f + 1|_2^2
};

ParallelogramCheck parallelogram_check(const StepFunction& f);

/// n equal cells with values |a_i| sqrt(n) / |x|_2. Throws UndefinedConstant for x == 0.
StepFunction vector_to_step(const Vector& x);

}  // namespace l1l2
