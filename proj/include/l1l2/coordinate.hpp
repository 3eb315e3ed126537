#pragma once

// Coordinate-subspace detection.
//
// An s-dimensional subspace on which |y|_1 <= sqrt(s) |y|_2 holds for every y
// is spanned by s standard basis vectors. Structurally this is the statement
// that {P e_i} is an orthogonal set; when it is not, the greedy phase
// construction produces a vector of S that violates the bound.
//
// Index sets are 0-based.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l1l2/subspace.hpp"
#include "l1l2/tightness.hpp"

namespace l1l2 {

inline constexpr double kDefaultStructureTolerance = 1e-8;
inline constexpr double kViolationMargin = 1e-9;
inline constexpr std::size_t kDefaultSamples = 200;

struct GreedyWitness {
  ConstantModulusVector phases;
  double value;  // |P (1/sqrt(n)) sum c_i e_i|_2
};

/// Sequential phase choice: the two columns with the largest off-diagonal Gram
/// entry go first (first phase fixed to 1), the rest follow in index order,
/// each phase aligning P e_k with the running sum. Real ties take +1.
GreedyWitness greedy_phase_witness(const Subspace& s);

struct CoordinateDecision {
  bool coordinate = false;
  std::vector<std::size_t> index_set;   // when coordinate
  std::optional<Vector> witness;        // unit vector of S, when not coordinate
  double witness_margin = 0.0;          // |w|_1 - sqrt(s) |w|_2
  double gram_offdiag = 0.0;            // max_{i != j} |<P e_i, P e_j>|
  double greedy_value = 0.0;
  std::string note;                     // set for complex subspaces
};

/// Structure test on the Gram matrix of {P e_i}. Requires 0 < tol < 1.
CoordinateDecision is_coordinate_subspace(const Subspace& s,
                                          double tol = kDefaultStructureTolerance);

struct SampleCheck {
  bool violation = false;
  std::optional<Vector> witness;
  double margin = 0.0;          // largest |y|_1 - sqrt(s) |y|_2 seen
  std::size_t checked = 0;
};

/// Checks |y|_1 <= sqrt(s) |y|_2 on the greedy direction and then on `samples`
/// random unit vectors of S; stops at the first violation beyond kViolationMargin.
SampleCheck verify_sqrt_s_bound_on_subspace(const Subspace& s, std::size_t samples,
                                            std::uint64_t seed);

/// Random unit vector of S (Gaussian coefficients in the orthonormal basis).
Vector random_unit_in_subspace(const Subspace& s, std::uint64_t seed, std::size_t index);

}  // namespace l1l2
