#include "l1l2/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "l1l2/tightness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace l1l2::kernels {
namespace {

// Row-major copy of the real part of B.
struct RealRows {
  std::size_t n;
  std::size_t s;
  std::vector<double> a;

  explicit RealRows(const Matrix& basis) : n(basis.rows()), s(basis.cols()), a(n * s) {
    if (basis.field() != Field::Real) {
      throw Error(ErrorKind::Refusal, "exact sign search requires a real subspace");
    }
    if (n > kExactSearchMaxDim) {
      throw Error(ErrorKind::Refusal, "exact sign search limited to n <= " +
                                          std::to_string(kExactSearchMaxDim));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < s; ++k) a[i * s + k] = basis(i, k).real();
  }
  const double* row(std::size_t i) const { return a.data() + i * s; }
};

// Coordinate 0 is fixed to +1; coordinate i >= 1 maps to bit (n - 1 - i), so
// numeric mask order equals lexicographic order of (c_1, ..., c_n) with + < -.
int sign_of(std::uint64_t mask, std::size_t n, std::size_t i) {
  if (i == 0) return 1;
  return ((mask >> (n - 1 - i)) & 1u) ? -1 : 1;
}

void evaluate_direct(const RealRows& b, std::uint64_t mask, std::vector<double>& y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < b.n; ++i) {
    const double sg = sign_of(mask, b.n, i);
    const double* r = b.row(i);
    for (std::size_t k = 0; k < b.s; ++k) y[k] += sg * r[k];
  }
}

double squared(const std::vector<double>& y) {
  double v = 0.0;
  for (double t : y) v += t * t;
  return v;
}

// Visits every mask of block `block` in Gray order with its squared value.
template <class Visit>
void scan_block(const RealRows& b, unsigned block_bits, std::uint64_t block,
                std::vector<double>& y, Visit&& visit) {
  std::uint64_t mask = block << block_bits;
  evaluate_direct(b, mask, y);
  visit(mask, squared(y));
  const std::uint64_t len = std::uint64_t{1} << block_bits;
  for (std::uint64_t t = 1; t < len; ++t) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(t));
    const std::size_t coord = b.n - 1 - bit;
    const double sg = sign_of(mask, b.n, coord);
    const double* r = b.row(coord);
    for (std::size_t k = 0; k < b.s; ++k) y[k] -= 2.0 * sg * r[k];
    mask ^= std::uint64_t{1} << bit;
    visit(mask, squared(y));
  }
}

SignSearchResult finish(const RealRows& b, std::uint64_t mask, std::uint64_t patterns) {
  SignSearchResult out;
  out.signs.resize(b.n);
  for (std::size_t i = 0; i < b.n; ++i) out.signs[i] = sign_of(mask, b.n, i);
  std::vector<double> y(b.s);
  evaluate_direct(b, mask, y);
  out.value = std::sqrt(squared(y) / static_cast<double>(b.n));
  out.patterns = patterns;
  return out;
}

double tie_threshold(double best) { return best - kTieWindow * best; }

}  // namespace

SignSearchResult sign_search_reference(const Matrix& basis) {
  const RealRows b(basis);
  const std::uint64_t patterns = std::uint64_t{1} << (b.n - 1);
  std::vector<double> y(b.s);
  double best = 0.0;
  for (std::uint64_t m = 0; m < patterns; ++m) {
    evaluate_direct(b, m, y);
    best = std::max(best, squared(y));
  }
  const double threshold = tie_threshold(best);
  for (std::uint64_t m = 0; m < patterns; ++m) {
    evaluate_direct(b, m, y);
    if (squared(y) >= threshold) return finish(b, m, patterns);
  }
  return finish(b, 0, patterns);  // unreachable: the maximizer qualifies
}

SignSearchResult sign_search(const Matrix& basis, ExecPolicy policy) {
  const RealRows b(basis);
  const unsigned bits = static_cast<unsigned>(b.n - 1);
  const unsigned block_bits = std::min(bits, kBlockBits);
  const std::int64_t blocks = std::int64_t{1} << (bits - block_bits);
  const bool parallel = policy == ExecPolicy::Parallel;

  double best = 0.0;
#pragma omp parallel if (parallel)
  {
    std::vector<double> y(b.s);
#pragma omp for schedule(static) reduction(max : best)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      scan_block(b, block_bits, static_cast<std::uint64_t>(blk), y,
                 [&](std::uint64_t, double v) { best = std::max(best, v); });
    }
  }

  const double threshold = tie_threshold(best);
  std::uint64_t winner = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel if (parallel)
  {
    std::vector<double> y(b.s);
#pragma omp for schedule(static) reduction(min : winner)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      scan_block(b, block_bits, static_cast<std::uint64_t>(blk), y,
                 [&](std::uint64_t m, double v) {
                   if (v >= threshold) winner = std::min(winner, m);
                 });
    }
  }
  return finish(b, winner, std::uint64_t{1} << bits);
}

double projected_norm(const Matrix& basis, const std::vector<Scalar>& phases) {
  const std::size_t n = basis.rows();
  if (phases.size() != n) throw Error(ErrorKind::Dimension, "phase vector length mismatch");
  double v = 0.0;
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Scalar z{};
    for (std::size_t i = 0; i < n; ++i) z += std::conj(basis(i, k)) * phases[i];
    v += std::norm(z);
  }
  return std::sqrt(v / static_cast<double>(n));
}

namespace {

// y = B B* c
std::vector<Scalar> apply_projector(const Matrix& basis, const std::vector<Scalar>& c) {
  const std::size_t n = basis.rows();
  const std::size_t s = basis.cols();
  std::vector<Scalar> z(s);
  for (std::size_t k = 0; k < s; ++k)
    for (std::size_t i = 0; i < n; ++i) z[k] += std::conj(basis(i, k)) * c[i];
  std::vector<Scalar> y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < s; ++k) y[i] += basis(i, k) * z[k];
  return y;
}

// One pass of exact coordinate maximization: c_i <- phase((Pc)_i - P_ii c_i),
// the unimodular c_i maximizing |Pc| with the other phases held fixed.
std::vector<Scalar> coordinate_sweep(const Matrix& basis, std::vector<Scalar> c) {
  const std::size_t n = basis.rows();
  const std::size_t s = basis.cols();
  auto y = apply_projector(basis, c);
  std::vector<Scalar> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar p{};
      for (std::size_t k = 0; k < s; ++k) p += basis(j, k) * std::conj(basis(i, k));
      col[j] = p;  // P_ji
    }
    const Scalar rest = y[i] - col[i] * c[i];
    if (rest == Scalar{}) continue;
    const Scalar next = unit_phase(rest);
    const Scalar delta = next - c[i];
    if (delta == Scalar{}) continue;
    for (std::size_t j = 0; j < n; ++j) y[j] += col[j] * delta;
    c[i] = next;
  }
  return c;
}

}  // namespace

AscentResult alternating_ascent(const Matrix& basis, std::vector<Scalar> start,
                                std::vector<double>* trace) {
  AscentResult r;
  r.phases = std::move(start);
  r.value = projected_norm(basis, r.phases);
  if (trace) trace->push_back(r.value);

  auto accept = [&](std::vector<Scalar> next) {
    const double v = projected_norm(basis, next);
    if (v < r.value) return false;  // rounding at a fixed point
    const double gain = v - r.value;
    r.phases = std::move(next);
    r.value = v;
    if (trace) trace->push_back(v);
    return gain >= kAscentStopImprovement;
  };

  while (r.iterations < kAscentMaxIterations) {
    const auto y = apply_projector(basis, r.phases);
    std::vector<Scalar> next(r.phases);
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] != Scalar{}) next[i] = unit_phase(y[i]);
    }
    ++r.iterations;
    if (accept(std::move(next))) continue;

    // Alternating step stalled; a fixed point of c = phase(Pc) can still be
    // improved one coordinate at a time when P_ii > |(Pc)_i|.
    ++r.sweeps;
    if (!accept(coordinate_sweep(basis, r.phases))) break;
  }
  return r;
}

std::vector<Scalar> random_start(Field field, std::size_t n, std::uint64_t seed,
                                 std::size_t restart) {
  const auto r = static_cast<std::uint64_t>(restart);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(r >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<Scalar> c(n);
  for (auto& ci : c) {
    const std::uint64_t bits = rng();
    if (field == Field::Real) {
      ci = (bits >> 63) ? -1.0 : 1.0;
    } else {
      const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
      ci = std::polar(1.0, 2.0 * std::numbers::pi * u);
    }
  }
  return c;
}

MultistartResult multistart_ascent(const Matrix& basis, std::size_t restarts,
                                   std::uint64_t seed, ExecPolicy policy) {
  if (restarts == 0) throw Error(ErrorKind::Domain, "restarts must be at least 1");
  std::vector<AscentResult> runs(restarts);
  const auto count = static_cast<std::int64_t>(restarts);
#pragma omp parallel for schedule(dynamic) if (policy == ExecPolicy::Parallel)
  for (std::int64_t r = 0; r < count; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    runs[idx] = alternating_ascent(basis, random_start(basis.field(), basis.rows(), seed, idx));
  }
  MultistartResult out;
  out.best = runs.front();
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].value > out.best.value) {
      out.best = runs[r];
      out.best_restart = r;
    }
  }
  return out;
}

void set_thread_count(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace l1l2::kernels
