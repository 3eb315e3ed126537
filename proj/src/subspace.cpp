#include "l1l2/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace l1l2 {

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)), projector_(basis_ * basis_.adjoint()) {}

Subspace Subspace::from_spanning_set(std::span<const Vector> vectors) {
  if (vectors.empty()) throw Error(ErrorKind::EmptySubspace, "spanning set is empty");
  const Vector& first = vectors.front();
  double largest = 0.0;
  for (const auto& v : vectors) {
    require_compatible(first, v);
    largest = std::max(largest, norm2(v));
  }
  if (largest == 0.0) throw Error(ErrorKind::EmptySubspace, "spanning set is all zero");

  std::vector<Vector> q;
  for (const auto& v : vectors) {
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : q) w = w - u.scaled(inner(w, u));
    }
    const double r = norm2(w);
    if (r < kRankTolerance * largest) continue;
    q.push_back(w.scaled(1.0 / r));
  }
  return Subspace(Matrix::from_columns(q));
}

Vector project(const Subspace& s, const Vector& x) {
  if (x.size() != s.ambient_dim()) {
    throw Error(ErrorKind::Dimension, "vector length does not match ambient dimension");
  }
  if (x.field() != s.field()) throw Error(ErrorKind::FieldMismatch, "cannot mix real and complex");
  const Matrix& b = s.basis();
  std::vector<Scalar> y(s.ambient_dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Scalar coef{};
    for (std::size_t i = 0; i < x.size(); ++i) coef += x[i] * std::conj(b(i, k));
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += coef * b(i, k);
  }
  return Vector(s.field(), std::move(y));
}

NearestUnit nearest_unit_in_subspace(const Subspace& s, const Vector& x) {
  const Vector px = project(s, x);
  const double r = norm2(px);
  if (r <= 1e-14 * std::max(1.0, norm2(x))) {
    throw Error(ErrorKind::NoUniqueNearest,
                "x is orthogonal to the subspace; every unit vector is equally close");
  }
  Vector point = px.scaled(1.0 / r);
  const double distance = norm2(x - point);
  return {std::move(point), distance};
}

std::string_view to_string(SearchMethod m) noexcept {
  return m == SearchMethod::ExactBruteForce ? "exact" : "heuristic";
}

SubspaceBoundReport subspace_constant_exact(const Subspace& s, ExecPolicy policy) {
  if (s.field() != Field::Real) {
    throw Error(ErrorKind::Refusal,
                "exact search needs a real subspace; complex phases form a continuum, use the "
                "heuristic");
  }
  if (s.ambient_dim() > kernels::kExactSearchMaxDim) {
    throw Error(ErrorKind::Refusal, "exact search supports n <= " +
                                        std::to_string(kernels::kExactSearchMaxDim) +
                                        " (got n = " + std::to_string(s.ambient_dim()) +
                                        "); use the heuristic mode");
  }
  const auto found = kernels::sign_search(s.basis(), policy);
  std::vector<Scalar> phases(found.signs.begin(), found.signs.end());
  ConstantModulusVector witness(Field::Real, std::move(phases));
  return {2.0 - 2.0 * found.value, found.value, std::move(witness),
          SearchMethod::ExactBruteForce, true};
}

SubspaceBoundReport subspace_constant_heuristic(const Subspace& s, std::size_t restarts,
                                                std::uint64_t seed, ExecPolicy policy) {
  const auto found = kernels::multistart_ascent(s.basis(), restarts, seed, policy);
  ConstantModulusVector witness(s.field(), found.best.phases);
  const double m = found.best.value;
  return {2.0 - 2.0 * m, m, std::move(witness), SearchMethod::AlternatingHeuristic, false};
}

L1Bound unit_vector_l1_bound(const Subspace& s) {
  const bool exact = s.field() == Field::Real && s.ambient_dim() <= kernels::kExactSearchMaxDim;
  const auto report = exact ? subspace_constant_exact(s)
                            : subspace_constant_heuristic(s, kDefaultRestarts, 0);
  const double sqrt_n = std::sqrt(static_cast<double>(s.ambient_dim()));
  return {(1.0 - report.c / 2.0) * sqrt_n, report.c, report.method, report.certified};
}

}  // namespace l1l2
