#include "l1l2/function_space.hpp"

#include <cmath>
#include <sstream>

namespace l1l2 {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorKind::Domain, "step function needs at least one cell");
  if (breakpoints_.size() != values_.size() + 1) {
    throw Error(ErrorKind::Domain, "need exactly one more breakpoint than values");
  }
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0) {
    throw Error(ErrorKind::Domain, "breakpoints must start at 0 and end at 1");
  }
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] > breakpoints_[k - 1])) {
      throw Error(ErrorKind::Domain, "breakpoints must be strictly increasing");
    }
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) throw Error(ErrorKind::Domain, "values must be finite");
    if (values_[k] < 0.0) {
      std::ostringstream msg;
      msg << "negative value " << values_[k] << " on cell " << k << "; f must be nonnegative";
      throw Error(ErrorKind::Domain, msg.str());
    }
  }
}

StepFunction StepFunction::uniform(std::vector<double> values) {
  const std::size_t m = values.size();
  if (m == 0) throw Error(ErrorKind::Domain, "step function needs at least one cell");
  std::vector<double> t(m + 1);
  for (std::size_t k = 0; k < m; ++k) t[k] = static_cast<double>(k) / static_cast<double>(m);
  t[m] = 1.0;
  return StepFunction(std::move(t), std::move(values));
}

StepFunction StepFunction::normalized() const {
  const double r = lp_norm(*this, 2);
  if (r == 0.0) throw Error(ErrorKind::Normalization, "cannot normalize the zero function");
  std::vector<double> v(values_);
  for (auto& x : v) x /= r;
  return StepFunction(breakpoints_, std::move(v));
}

double lp_norm(const StepFunction& f, int p) {
  if (p != 1 && p != 2) throw Error(ErrorKind::Domain, "only p = 1 and p = 2 are supported");
  double s = 0.0;
  for (std::size_t k = 0; k < f.cells(); ++k) {
    const double v = f.values()[k];
    s += (p == 1 ? v : v * v) * f.width(k);
  }
  return p == 1 ? s : std::sqrt(s);
}

namespace {

void require_unit(const StepFunction& f) {
  const double r = lp_norm(f, 2);
  if (std::abs(r - 1.0) > kUnitNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "f must have unit L2 norm (got " << r << "); normalize first";
    throw Error(ErrorKind::Normalization, msg.str());
  }
}

// |f + shift|_2^2
double shifted_energy(const StepFunction& f, double shift) {
  double s = 0.0;
  for (std::size_t k = 0; k < f.cells(); ++k) {
    const double d = f.values()[k] + shift;
    s += d * d * f.width(k);
  }
  return s;
}

}  // namespace

double peakiness(const StepFunction& f) {
  require_unit(f);
  return shifted_energy(f, -1.0);
}

ParallelogramCheck parallelogram_check(const StepFunction& f) {
  require_unit(f);
  return {4.0, shifted_energy(f, -1.0) + shifted_energy(f, 1.0)};
}

StepFunction vector_to_step(const Vector& x) {
  if (x.is_zero()) {
    throw Error(ErrorKind::UndefinedConstant, "tightness constant undefined for zero vector");
  }
  const double scale = std::sqrt(static_cast<double>(x.size())) / norm2(x);
  std::vector<double> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = std::abs(x[i]) * scale;
  return StepFunction::uniform(std::move(v));
}

}  // namespace l1l2
