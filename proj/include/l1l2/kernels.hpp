#pragma once

// Inner loops of the subspace constant: exhaustive sign-pattern search and
// alternating phase ascent.
//
// All kernels take an n x s matrix B with orthonormal columns; for a phase
// vector c, |P c| = |B* c| where P = B B*. Values are reported for the
// normalized vector c / sqrt(n).
//
// sign_search_reference evaluates each pattern from scratch and is kept as the
// serial oracle. sign_search walks fixed-size blocks in Gray-code order and
// distributes the blocks over OpenMP threads; its result depends only on the
// block layout, never on the thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "l1l2/field.hpp"

namespace l1l2::kernels {

enum class ExecPolicy { Serial, Parallel };

/// Largest ambient dimension accepted by the exact search (2^(n-1) patterns).
inline constexpr std::size_t kExactSearchMaxDim = 22;

/// Patterns whose squared value is within this relative window of the maximum
/// count as ties; the lexicographically smallest one wins.
inline constexpr double kTieWindow = 1e-11;

/// Gray-code block width in bits; each block restarts from a direct evaluation.
inline constexpr unsigned kBlockBits = 10;

struct SignSearchResult {
  std::vector<int> signs;      // +1 / -1, signs[0] == +1
  double value = 0.0;          // |B^T signs| / sqrt(n), recomputed directly
  std::uint64_t patterns = 0;  // number of patterns visited per pass
};

/// Direct per-pattern evaluation. Real basis only.
SignSearchResult sign_search_reference(const Matrix& basis);

/// Blocked Gray-code search. Serial and Parallel return identical results.
SignSearchResult sign_search(const Matrix& basis, ExecPolicy policy = ExecPolicy::Parallel);

/// |B* c| / sqrt(n).
double projected_norm(const Matrix& basis, const std::vector<Scalar>& phases);

struct AscentResult {
  std::vector<Scalar> phases;
  double value = 0.0;
  std::size_t iterations = 0;  // alternating steps
  std::size_t sweeps = 0;      // coordinate sweeps
};

inline constexpr double kAscentStopImprovement = 1e-12;
inline constexpr std::size_t kAscentMaxIterations = 10000;

/// Alternating maximization from `start`: c <- phase(P c) until the gain drops
/// below kAscentStopImprovement. Coordinates with (P c)_i == 0 keep their phase.
/// When a step stalls, one sweep of coordinate-wise maximization
/// c_i <- phase((P c)_i - P_ii c_i) is tried; the run ends when neither move
/// gains kAscentStopImprovement. When `trace` is given it receives the value
/// of every accepted iterate; the sequence is non-decreasing.
AscentResult alternating_ascent(const Matrix& basis, std::vector<Scalar> start,
                                std::vector<double>* trace = nullptr);

struct MultistartResult {
  AscentResult best;
  std::size_t best_restart = 0;
};

/// Random unimodular starting phases for restart `restart` of a run seeded by `seed`.
std::vector<Scalar> random_start(Field field, std::size_t n, std::uint64_t seed,
                                 std::size_t restart);

/// Independent restarts; best value wins, ties go to the lowest restart index.
MultistartResult multistart_ascent(const Matrix& basis, std::size_t restarts,
                                   std::uint64_t seed, ExecPolicy policy = ExecPolicy::Parallel);

/// Sets the OpenMP thread count for subsequent parallel kernels (no-op without OpenMP).
void set_thread_count(int threads);
int thread_count();

}  // namespace l1l2::kernels
