#include "l1l2/coordinate.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace l1l2 {
namespace {

std::vector<Vector> projected_basis(const Subspace& s) {
  std::vector<Vector> cols;
  cols.reserve(s.ambient_dim());
  for (std::size_t i = 0; i < s.ambient_dim(); ++i) cols.push_back(s.projector().column(i));
  return cols;
}

struct OffDiagonal {
  double value = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

OffDiagonal largest_off_diagonal(const std::vector<Vector>& cols) {
  OffDiagonal best;
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      const double g = std::abs(inner(cols[i], cols[j]));
      if (g > best.value) best = {g, i, j};
    }
  return best;
}

GreedyWitness greedy_from_columns(const Subspace& s, const std::vector<Vector>& cols,
                                  const OffDiagonal& off) {
  const std::size_t n = s.ambient_dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (off.value > 0.0) {
    order.clear();
    order.push_back(off.i);
    order.push_back(off.j);
    for (std::size_t k = 0; k < n; ++k)
      if (k != off.i && k != off.j) order.push_back(k);
  }

  std::vector<Scalar> phases(n, Scalar{1.0});
  Vector running = cols[order.front()];
  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t k = order[step];
    const Scalar c = unit_phase(inner(running, cols[k]));
    phases[k] = c;
    running = running + cols[k].scaled(c);
  }
  const double value = kernels::projected_norm(s.basis(), phases);
  return {ConstantModulusVector(s.field(), std::move(phases)), value};
}

// Unit vector P c / |P c| for the witness phases.
Vector witness_direction(const Subspace& s, const ConstantModulusVector& phases) {
  const Vector pc = project(s, phases.represented());
  return pc.scaled(1.0 / norm2(pc));
}

double bound_margin(const Vector& y, std::size_t dim) {
  return norm1(y) - std::sqrt(static_cast<double>(dim)) * norm2(y);
}

}  // namespace

GreedyWitness greedy_phase_witness(const Subspace& s) {
  const auto cols = projected_basis(s);
  return greedy_from_columns(s, cols, largest_off_diagonal(cols));
}

CoordinateDecision is_coordinate_subspace(const Subspace& s, double tol) {
  if (!(tol > 0.0 && tol < 1.0)) throw Error(ErrorKind::Domain, "tolerance must lie in (0, 1)");
  const auto cols = projected_basis(s);
  const auto off = largest_off_diagonal(cols);

  CoordinateDecision d;
  d.gram_offdiag = off.value;
  if (s.field() == Field::Complex) {
    d.note = "per proof technique, theorem stated for real scalars";
  }

  bool structured = off.value <= tol;
  std::vector<std::size_t> index_set;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const double r = norm2(cols[i]);
    if (std::abs(r) > tol && std::abs(r - 1.0) > tol) structured = false;
    if (r > 0.5) index_set.push_back(i);
  }
  if (index_set.size() != s.dim()) structured = false;

  const auto greedy = greedy_from_columns(s, cols, off);
  d.greedy_value = greedy.value;
  if (structured) {
    d.coordinate = true;
    d.index_set = std::move(index_set);
  } else {
    Vector w = witness_direction(s, greedy.phases);
    d.witness_margin = bound_margin(w, s.dim());
    d.witness = std::move(w);
  }
  return d;
}

Vector random_unit_in_subspace(const Subspace& s, std::uint64_t seed, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  const Matrix& b = s.basis();
  for (;;) {
    std::vector<Scalar> y(s.ambient_dim());
    for (std::size_t k = 0; k < s.dim(); ++k) {
      Scalar z = gauss(rng);
      if (s.field() == Field::Complex) z += Scalar(0.0, gauss(rng));
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += b(i, k) * z;
    }
    Vector v(s.field(), std::move(y));
    const double r = norm2(v);
    if (r > 0.0) return v.scaled(1.0 / r);
  }
}

SampleCheck verify_sqrt_s_bound_on_subspace(const Subspace& s, std::size_t samples,
                                            std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorKind::Domain, "samples must be at least 1");
  SampleCheck out;
  out.margin = -std::numeric_limits<double>::infinity();
  auto check = [&](Vector y) {
    const double m = bound_margin(y, s.dim());
    ++out.checked;
    out.margin = std::max(out.margin, m);
    if (m > kViolationMargin) {
      out.violation = true;
      out.witness = std::move(y);
      out.margin = m;
      return true;
    }
    return false;
  };

  if (check(witness_direction(s, greedy_phase_witness(s).phases))) return out;
  for (std::size_t k = 0; k < samples; ++k) {
    if (check(random_unit_in_subspace(s, seed, k))) return out;
  }
  return out;
}

}  // namespace l1l2
