#include "l1l2/tightness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace l1l2 {
namespace {

void require_nonzero(const Vector& x) {
  if (x.is_zero()) {
    throw Error(ErrorKind::UndefinedConstant, "tightness constant undefined for zero vector");
  }
}

double clamp_constant(double c) { return std::clamp(c, 0.0, 2.0); }

}  // namespace

ConstantModulusVector::ConstantModulusVector(Field field, std::vector<Scalar> phases)
    : field_(field), phases_(std::move(phases)) {
  if (phases_.empty()) throw Error(ErrorKind::Domain, "constant modulus vector must be nonempty");
  for (const auto& c : phases_) {
    if (std::abs(std::abs(c) - 1.0) > kModulusTolerance) {
      throw Error(ErrorKind::Domain, "phase is not unimodular");
    }
    if (field_ == Field::Real && c.imag() != 0.0) {
      throw Error(ErrorKind::FieldMismatch, "real constant modulus vector has complex phase");
    }
  }
}

Vector ConstantModulusVector::represented() const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(phases_.size()));
  std::vector<Scalar> v(phases_);
  for (auto& c : v) c *= scale;
  return Vector(field_, std::move(v));
}

Scalar unit_phase(const Scalar& a) noexcept {
  const double r = std::abs(a);
  if (r == 0.0) return 1.0;
  if (a.imag() == 0.0) return a.real() > 0.0 ? 1.0 : -1.0;
  Scalar c = a / r;
  return c / std::abs(c);
}

double tightness_constant(const Vector& x) {
  require_nonzero(x);
  const double n = static_cast<double>(x.size());
  return clamp_constant(2.0 * (1.0 - norm1(x) / (std::sqrt(n) * norm2(x))));
}

double tightness_constant_by_deviation(const Vector& x) {
  require_nonzero(x);
  const double l2 = norm2(x);
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(x.size()));
  double s = 0.0;
  for (const auto& a : x.entries()) {
    const double d = std::abs(a) / l2 - inv_sqrt_n;
    s += d * d;
  }
  return clamp_constant(s);
}

NearestConstantModulus nearest_constant_modulus(const Vector& x) {
  require_nonzero(x);
  std::vector<Scalar> phases(x.size());
  std::transform(x.entries().begin(), x.entries().end(), phases.begin(), unit_phase);
  ConstantModulusVector cm(x.field(), std::move(phases));
  const double distance = norm2(x.scaled(1.0 / norm2(x)) - cm.represented());
  return {std::move(cm), distance};
}

bool satisfies_sqrt_s_bound(const Vector& x, double s) {
  require_nonzero(x);
  const double n = static_cast<double>(x.size());
  if (!(s > 0.0) || s > n) {
    throw Error(ErrorKind::Domain,
                "s must satisfy 0 < s <= n (n = " + std::to_string(x.size()) + ")");
  }
  const double c = tightness_constant(x);
  return 1.0 - c / 2.0 <= std::sqrt(s / n) + kSqrtSBoundTolerance;
}

TightnessReport analyze(const Vector& x) {
  require_nonzero(x);
  auto nearest = nearest_constant_modulus(x);
  return TightnessReport{x.size(),         norm1(x), norm2(x), tightness_constant(x),
                         std::move(nearest.phases), nearest.distance};
}

}  // namespace l1l2
