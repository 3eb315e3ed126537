#pragma once

// Exact constant of the l1-l2 inequality for a single vector.
//
// For x != 0 in R^n or C^n the defect
//
//   c_x = 2 (1 - |x|_1 / (sqrt(n) |x|_2))
//
// satisfies |x|_1 = (1 - c_x/2) sqrt(n) |x|_2, equals the squared deviation
// sum_i (|a_i|/|x|_2 - 1/sqrt(n))^2, and is the squared distance from
// x/|x|_2 to the closest constant modulus vector.

#include <utility>
#include <vector>

#include "l1l2/field.hpp"

namespace l1l2 {

/// (1/sqrt(n)) (c_1, ..., c_n) with every |c_i| = 1.
class ConstantModulusVector {
 public:
  static constexpr double kModulusTolerance = 1e-12;

  /// Throws Domain if some | |c_i| - 1 | exceeds kModulusTolerance.
  ConstantModulusVector(Field field, std::vector<Scalar> phases);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return phases_.size(); }
  const std::vector<Scalar>& phases() const noexcept { return phases_; }

  /// The unit vector (1/sqrt(n)) c.
  Vector represented() const;

 private:
  Field field_;
  std::vector<Scalar> phases_;
};

/// Unit phase a/|a|, renormalized; 1 for a == 0.
Scalar unit_phase(const Scalar& a) noexcept;

struct TightnessReport {
  std::size_t n;
  double l1;
  double l2;
  double c_x;
  ConstantModulusVector nearest;
  double distance;
};

struct NearestConstantModulus {
  ConstantModulusVector phases;
  double distance;
};

/// c_x from the norm ratio, clamped to [0, 2]. Throws UndefinedConstant for x == 0.
double tightness_constant(const Vector& x);

/// c_x from sum_i (|a_i|/|x|_2 - 1/sqrt(n))^2, clamped to [0, 2].
double tightness_constant_by_deviation(const Vector& x);

/// Closest constant modulus vector to x/|x|_2 and the distance to it.
NearestConstantModulus nearest_constant_modulus(const Vector& x);

inline constexpr double kSqrtSBoundTolerance = 1e-9;

/// |x|_1 <= sqrt(s) |x|_2, decided through 1 - c_x/2 <= sqrt(s/n).
/// Boundary cases resolve to true within kSqrtSBoundTolerance.
/// Throws Domain unless 0 < s <= n.
bool satisfies_sqrt_s_bound(const Vector& x, double s);

TightnessReport analyze(const Vector& x);

}  // namespace l1l2
