#pragma once

// Seeded random inputs for property tests.

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "l1l2/field.hpp"
#include "l1l2/function_space.hpp"
#include "l1l2/subspace.hpp"

namespace l1l2::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double gauss() { return std::normal_distribution<double>()(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return index(0, 1) == 1; }

  /// Gaussian entries; occasionally zeroes a few coordinates to exercise the
  /// zero-phase rule, never returns the zero vector.
  Vector vector(Field field, std::size_t n) {
    for (;;) {
      std::vector<Scalar> v(n);
      for (auto& a : v) {
        a = gauss();
        if (field == Field::Complex) a += Scalar(0.0, gauss());
        if (index(0, 9) == 0) a = 0.0;
      }
      Vector x(field, std::move(v));
      if (!x.is_zero()) return x;
    }
  }

  Vector real_vector(std::size_t n) { return vector(Field::Real, n); }

  /// Span of `dim` Gaussian vectors in the given field.
  Subspace subspace(Field field, std::size_t n, std::size_t dim) {
    std::vector<Vector> span;
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<Scalar> v(n);
      for (auto& a : v) {
        a = gauss();
        if (field == Field::Complex) a += Scalar(0.0, gauss());
      }
      span.emplace_back(field, std::move(v));
    }
    return Subspace::from_spanning_set(span);
  }

  /// Span of e_i, i in `indices`.
  static Subspace coordinate_subspace(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<Vector> span;
    for (auto i : indices) span.push_back(basis_vector(Field::Real, n, i));
    return Subspace::from_spanning_set(span);
  }

  /// Random index set of size dim (sorted).
  std::vector<std::size_t> index_set(std::size_t n, std::size_t dim) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng_);
    all.resize(dim);
    std::sort(all.begin(), all.end());
    return all;
  }

  /// Nonnegative unit-norm step function with random breakpoints (m cells).
  StepFunction unit_step(std::size_t m) {
    std::vector<double> t{0.0};
    std::vector<double> inner;
    while (inner.size() + 1 < m) {
      const double u = uniform(1e-6, 1.0 - 1e-6);
      if (std::find(inner.begin(), inner.end(), u) == inner.end()) inner.push_back(u);
    }
    std::sort(inner.begin(), inner.end());
    t.insert(t.end(), inner.begin(), inner.end());
    t.push_back(1.0);
    std::vector<double> v(m);
    bool any = false;
    for (auto& x : v) {
      x = index(0, 4) == 0 ? 0.0 : uniform(0.0, 3.0);
      any = any || x > 0.0;
    }
    if (!any) v.front() = 1.0;
    return StepFunction(std::move(t), std::move(v)).normalized();
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace l1l2::testing
