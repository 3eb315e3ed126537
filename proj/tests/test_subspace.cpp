#include <doctest.h>

#include <cmath>

#include "l1l2/coordinate.hpp"
#include "l1l2/subspace.hpp"
#include "support/generators.hpp"

using namespace l1l2;
using l1l2::testing::Gen;

namespace {

Subspace span_of(std::initializer_list<Vector> vs) {
  std::vector<Vector> v(vs);
  return Subspace::from_spanning_set(v);
}

Matrix real_matrix(std::size_t n, std::initializer_list<double> rowmajor) {
  Matrix m(n, n);
  std::size_t k = 0;
  for (double v : rowmajor) {
    m(k / n, k % n) = v;
    ++k;
  }
  return m;
}

// 2 - 2 max |P c| over sign vectors, computed as the minimum squared distance
// from the sign vector c/sqrt(n) to its nearest unit vector in S.
double min_sign_distance_squared(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    std::vector<double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = ((m >> i) & 1u ? -1.0 : 1.0) / std::sqrt(double(n));
    const auto x = Vector::real(c);
    const double d = nearest_unit_in_subspace(s, x).distance;
    best = std::min(best, d * d);
  }
  return best;
}

}  // namespace

TEST_SUITE("subspace") {

TEST_CASE("from_spanning_set examples") {
  auto s = span_of({Vector::real({1, 0, 0}), Vector::real({0, 1, 0})});
  CHECK(s.dim() == 2);
  CHECK(max_abs_diff(s.projector(), real_matrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 0})) < 1e-15);

  s = span_of({Vector::real({1, 1}), Vector::real({2, 2})});
  CHECK(s.dim() == 1);
  CHECK(max_abs_diff(s.projector(), real_matrix(2, {0.5, 0.5, 0.5, 0.5})) < 1e-15);

  s = span_of({Vector::real({3, 4})});
  CHECK(max_abs_diff(s.projector(), real_matrix(2, {9 / 25.0, 12 / 25.0, 12 / 25.0, 16 / 25.0})) <
        1e-15);
}

TEST_CASE("empty and mixed spanning sets are rejected") {
  try {
    (void)span_of({Vector::real({0, 0}), Vector::real({0, 0})});
    FAIL("zero span accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptySubspace);
  }
  CHECK_THROWS_AS((void)span_of({Vector::real({1, 0}), Vector::real({1, 0, 0})}), Error);
  CHECK_THROWS_AS((void)span_of({Vector::real({1, 0}), Vector::complex({{1, 0}, {0, 0}})}), Error);
}

TEST_CASE("project examples") {
  const auto e1 = span_of({Vector::real({1, 0})});
  const auto p = project(e1, Vector::real({3, 4}));
  CHECK(p[0] == Scalar(3.0));
  CHECK(p[1] == Scalar(0.0));

  const auto diag = span_of({Vector::real({1, 1})});
  const auto q = project(diag, Vector::real({1, 0}));
  CHECK(std::abs(q[0] - 0.5) < 1e-15);
  CHECK(std::abs(q[1] - 0.5) < 1e-15);

  const auto in_s = Vector::real({2, 2});
  CHECK(norm2(project(diag, in_s) - in_s) < 1e-15);

  CHECK_THROWS_AS((void)project(diag, Vector::real({1, 0, 0})), Error);
}

TEST_CASE("nearest_unit_in_subspace examples") {
  const auto e1 = span_of({Vector::real({1, 0})});
  auto r = nearest_unit_in_subspace(e1, Vector::real({3, 4}));
  CHECK(r.point[0] == Scalar(1.0));
  CHECK(std::abs(r.distance - std::sqrt(20.0)) < 1e-14);

  const double h = 1.0 / std::sqrt(2.0);
  r = nearest_unit_in_subspace(span_of({Vector::real({1, 1})}), Vector::real({h, h}));
  CHECK(r.distance < 1e-15);

  try {
    (void)nearest_unit_in_subspace(e1, Vector::real({0, 1}));
    FAIL("orthogonal vector accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoUniqueNearest);
  }
}

TEST_CASE("subspace_constant_exact examples") {
  auto r = subspace_constant_exact(span_of({Vector::real({1, 0})}));
  CHECK(std::abs(r.max_proj_norm - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(r.c - (2.0 - std::sqrt(2.0))) < 1e-14);
  CHECK(r.certified);
  CHECK(r.method == SearchMethod::ExactBruteForce);
  // all four patterns tie; the lexicographically smallest with c_1 = +1 wins
  CHECK(r.witness.phases() == std::vector<Scalar>{1.0, 1.0});

  std::vector<Vector> full;
  for (std::size_t i = 0; i < 5; ++i) full.push_back(basis_vector(Field::Real, 5, i));
  r = subspace_constant_exact(Subspace::from_spanning_set(full));
  CHECK(std::abs(r.max_proj_norm - 1.0) < 1e-15);
  CHECK(std::abs(r.c) < 1e-14);

  r = subspace_constant_exact(span_of({Vector::real({1, 1})}));
  CHECK(std::abs(r.max_proj_norm - 1.0) < 1e-15);
  CHECK(r.witness.phases() == std::vector<Scalar>{1.0, 1.0});
}

TEST_CASE("exact search refusals") {
  try {
    (void)subspace_constant_exact(span_of({Vector::complex({{1, 0}, {0, 1}})}));
    FAIL("complex accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Refusal);
  }
  try {
    std::vector<double> v(23, 1.0);
    (void)subspace_constant_exact(span_of({Vector::real(v)}));
    FAIL("n = 23 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Refusal);
  }
}

TEST_CASE("subspace_constant_heuristic examples") {
  auto r = subspace_constant_heuristic(span_of({Vector::real({1, 0})}), 8, 0);
  CHECK(std::abs(r.max_proj_norm - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK_FALSE(r.certified);

  std::vector<Vector> full;
  for (std::size_t i = 0; i < 4; ++i) full.push_back(basis_vector(Field::Real, 4, i));
  const auto fs = Subspace::from_spanning_set(full);
  std::vector<double> trace;
  const auto one = kernels::alternating_ascent(fs.basis(), kernels::random_start(Field::Real, 4, 3, 0),
                                               &trace);
  CHECK(std::abs(one.value - 1.0) < 1e-15);
  CHECK(one.iterations == 1);

  Gen g(31);
  const auto s = g.subspace(Field::Real, 10, 3);
  r = subspace_constant_heuristic(s, 32, 5);
  CHECK(r.max_proj_norm >= std::sqrt(0.3) - 1e-9);
  CHECK(r.max_proj_norm <= subspace_constant_exact(s).max_proj_norm + 1e-12);
}

TEST_CASE("heuristic is reproducible and policy independent") {
  Gen g(32);
  const auto s = g.subspace(Field::Complex, 9, 3);
  const auto a = subspace_constant_heuristic(s, 16, 42, ExecPolicy::Serial);
  const auto b = subspace_constant_heuristic(s, 16, 42, ExecPolicy::Parallel);
  CHECK(a.max_proj_norm == b.max_proj_norm);
  CHECK(a.witness.phases() == b.witness.phases());
  CHECK(a.max_proj_norm <= 1.0 + 1e-12);
}

TEST_CASE("unit_vector_l1_bound examples") {
  auto b = unit_vector_l1_bound(span_of({Vector::real({1, 0})}));
  CHECK(std::abs(b.value - 1.0) < 1e-14);
  CHECK(b.certified);

  std::vector<Vector> full;
  for (std::size_t i = 0; i < 6; ++i) full.push_back(basis_vector(Field::Real, 6, i));
  b = unit_vector_l1_bound(Subspace::from_spanning_set(full));
  CHECK(std::abs(b.value - std::sqrt(6.0)) < 1e-14);

  b = unit_vector_l1_bound(span_of({Vector::real({1, 1})}));
  CHECK(std::abs(b.value - std::sqrt(2.0)) < 1e-14);

  b = unit_vector_l1_bound(span_of({Vector::complex({{1, 0}, {0, 1}})}));
  CHECK_FALSE(b.certified);
  CHECK(b.method == SearchMethod::AlternatingHeuristic);
}

TEST_CASE("projector laws and Parseval identity") {
  Gen g(33);
  for (int t = 0; t < 200; ++t) {
    const auto field = g.coin() ? Field::Real : Field::Complex;
    const auto n = g.index(1, 16);
    const auto dim = g.index(1, n);
    const auto s = g.subspace(field, n, dim);
    const Matrix& p = s.projector();
    const Matrix& b = s.basis();
    CHECK(max_abs_diff(b.adjoint() * b, Matrix::identity(s.dim(), field)) <= 1e-10);
    CHECK(max_abs_diff(p * p, p) <= 1e-10);
    CHECK(max_abs_diff(p.adjoint(), p) <= 1e-10);
    CHECK(std::abs(p.trace_real() - double(s.dim())) <= 1e-8);

    double parseval = 0.0;
    for (std::size_t i = 0; i < n; ++i) parseval += norm2_squared(project(s, basis_vector(field, n, i)));
    CHECK(std::abs(parseval - double(s.dim())) <= 1e-8);
  }
}

TEST_CASE("rank deflation") {
  Gen g(34);
  for (int t = 0; t < 50; ++t) {
    const auto a = g.real_vector(6);
    const auto b = g.real_vector(6);
    std::vector<Vector> span{a, b, a.scaled(2.0) - b.scaled(0.5), b.scaled(-3.0)};
    CHECK(Subspace::from_spanning_set(span).dim() == 2);
  }
}

TEST_CASE("Px/|Px| beats random unit vectors of S") {
  Gen g(35);
  for (int t = 0; t < 50; ++t) {
    const auto field = g.coin() ? Field::Real : Field::Complex;
    const auto n = g.index(2, 12);
    const auto s = g.subspace(field, n, g.index(1, n));
    const auto x = g.vector(field, n).scaled(g.uniform(0.1, 3.0));
    const auto r = nearest_unit_in_subspace(s, x);
    const double identity = norm2_squared(x) - 2.0 * norm2(project(s, x)) + 1.0;
    CHECK(std::abs(r.distance * r.distance - identity) <= 1e-10);
    for (std::size_t k = 0; k < 500; ++k) {
      const auto y = random_unit_in_subspace(s, 99 + static_cast<std::uint64_t>(t), k);
      CHECK(r.distance <= norm2(x - y) + 1e-12);
    }
  }
}

TEST_CASE("exact constant equals the sign-vector distance form") {
  Gen g(36);
  for (int t = 0; t < 40; ++t) {
    const auto n = g.index(1, 10);
    const auto s = g.subspace(Field::Real, n, g.index(1, n));
    const auto r = subspace_constant_exact(s);
    CHECK(std::abs(r.c - min_sign_distance_squared(s)) <= 1e-10);
    CHECK(std::abs(norm2(project(s, r.witness.represented())) - r.max_proj_norm) <= 1e-10);

    // the witness direction attains the l1 bound
    const auto pw = project(s, r.witness.represented());
    const auto y = pw.scaled(1.0 / norm2(pw));
    const double bound = (1.0 - r.c / 2.0) * std::sqrt(double(n));
    CHECK(std::abs(norm1(y) - bound) <= 1e-8);
    for (std::size_t k = 0; k < 100; ++k) {
      CHECK(norm1(random_unit_in_subspace(s, 7, k)) <= bound + 1e-9);
    }
  }
}

TEST_CASE("heuristic soundness and monotone iterates") {
  Gen g(37);
  for (int t = 0; t < 40; ++t) {
    const auto n = g.index(2, 12);
    const auto s = g.subspace(Field::Real, n, g.index(1, n));
    const auto exact = subspace_constant_exact(s);
    const auto heur = subspace_constant_heuristic(s, 8, static_cast<std::uint64_t>(t));
    CHECK(heur.max_proj_norm <= exact.max_proj_norm + 1e-12);

    for (std::size_t r = 0; r < 4; ++r) {
      std::vector<double> trace;
      (void)kernels::alternating_ascent(s.basis(), kernels::random_start(Field::Real, n, 1, r), &trace);
      for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] >= trace[k - 1]);
    }
  }
  for (int t = 0; t < 20; ++t) {
    const auto n = g.index(2, 10);
    const auto s = g.subspace(Field::Complex, n, g.index(1, n));
    std::vector<double> trace;
    (void)kernels::alternating_ascent(s.basis(), kernels::random_start(Field::Complex, n, 2, 0), &trace);
    for (std::size_t k = 1; k < trace.size(); ++k) CHECK(trace[k] >= trace[k - 1]);
  }
}

}  // TEST_SUITE
