#pragma once

// Subspaces of R^n / C^n, orthogonal projection, and the sharp l1 constant of
// a subspace.
//
// For a subspace S with projector P the constant
//
//   c = 2 - 2 max { |P x|_2 : x constant modulus }
//
// is the largest c with |y|_1 <= (1 - c/2) sqrt(n) for every unit y in S.

#include <cstdint>
#include <span>
#include <string_view>

#include "l1l2/field.hpp"
#include "l1l2/kernels.hpp"
#include "l1l2/tightness.hpp"

namespace l1l2 {

using kernels::ExecPolicy;

class Subspace {
 public:
  /// Relative residual below which a spanning vector counts as dependent.
  static constexpr double kRankTolerance = 1e-10;

  /// Orthonormalizes by modified Gram-Schmidt with one re-orthogonalization
  /// pass. Throws EmptySubspace when the numerical rank is 0.
  static Subspace from_spanning_set(std::span<const Vector> vectors);

  std::size_t ambient_dim() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  Field field() const noexcept { return basis_.field(); }

  /// n x s, orthonormal columns.
  const Matrix& basis() const noexcept { return basis_; }
  /// n x n, P = B B*.
  const Matrix& projector() const noexcept { return projector_; }

 private:
  explicit Subspace(Matrix basis);

  Matrix basis_;
  Matrix projector_;
};

Vector project(const Subspace& s, const Vector& x);

struct NearestUnit {
  Vector point;
  double distance;
};

/// Px/|Px| and its distance to x. Throws NoUniqueNearest when Px == 0.
NearestUnit nearest_unit_in_subspace(const Subspace& s, const Vector& x);

enum class SearchMethod { ExactBruteForce, AlternatingHeuristic };

std::string_view to_string(SearchMethod m) noexcept;

struct SubspaceBoundReport {
  double c;
  double max_proj_norm;
  ConstantModulusVector witness;
  SearchMethod method;
  bool certified;
};

/// Exhaustive search over sign vectors. Throws Refusal for complex subspaces
/// and for ambient dimension above kernels::kExactSearchMaxDim.
SubspaceBoundReport subspace_constant_exact(const Subspace& s,
                                            ExecPolicy policy = ExecPolicy::Parallel);

/// Best of `restarts` alternating ascents; never certified.
SubspaceBoundReport subspace_constant_heuristic(const Subspace& s, std::size_t restarts,
                                                std::uint64_t seed,
                                                ExecPolicy policy = ExecPolicy::Parallel);

inline constexpr std::size_t kDefaultRestarts = 32;

struct L1Bound {
  double value;  // (1 - c/2) sqrt(n)
  double c;
  SearchMethod method;
  bool certified;
};

/// Bound on |y|_1 over unit y in S. Exact when the search is admissible,
/// otherwise heuristic (kDefaultRestarts, seed 0) and flagged uncertified.
L1Bound unit_vector_l1_bound(const Subspace& s);

}  // namespace l1l2
