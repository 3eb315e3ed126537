#include <doctest.h>

#include <cmath>
#include <limits>

#include "l1l2/field.hpp"
#include "support/generators.hpp"

using namespace l1l2;
using l1l2::testing::Gen;

TEST_SUITE("field_core") {

TEST_CASE("norm1 examples") {
  CHECK(norm1(Vector::real({1, 0, 0})) == 1.0);
  CHECK(norm1(Vector::real({3, 4})) == 7.0);
  CHECK(norm1(Vector::complex({{3, 4}, {0, 0}})) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("norm2 examples") {
  CHECK(norm2(Vector::real({1, 0, 0})) == 1.0);
  CHECK(norm2(Vector::real({3, 4})) == 5.0);
  CHECK(norm2(Vector::real({1, 1, 1, 1})) == 2.0);
}

TEST_CASE("inner product examples") {
  CHECK(inner(Vector::real({1, 0}), Vector::real({0, 1})) == Scalar(0.0));
  CHECK(inner(Vector::real({1, 2}), Vector::real({3, 4})) == Scalar(11.0));
  CHECK(inner(Vector::complex({{0, 1}, {0, 0}}), Vector::complex({{0, 1}, {0, 0}})) == Scalar(1.0));
}

TEST_CASE("inner is conjugate-linear in the second argument") {
  const auto x = Vector::complex({{1, 2}, {3, -1}});
  const auto y = Vector::complex({{0, 1}, {2, 2}});
  const Scalar a(0.5, -1.5);
  const Scalar lhs = inner(x, y.scaled(a));
  const Scalar rhs = std::conj(a) * inner(x, y);
  CHECK(std::abs(lhs - rhs) < 1e-14);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(Vector::real(std::vector<double>{}), Error);
  try {
    (void)inner(Vector::real({1, 2}), Vector::real({1, 2, 3}));
    FAIL("expected a dimension error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Dimension);
  }
  try {
    (void)inner(Vector::real({1, 2}), Vector::complex({{1, 0}, {2, 0}}));
    FAIL("expected a field mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
  CHECK_THROWS_AS(Vector(Field::Real, {Scalar(1.0, 1.0)}), Error);
}

TEST_CASE("norms agree with direct summation") {
  Gen g(11);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int t = 0; t < 200; ++t) {
    const auto field = g.coin() ? Field::Real : Field::Complex;
    const auto n = g.index(1, 64);
    const auto x = g.vector(field, n);
    long double s1 = 0, s2 = 0;
    for (const auto& a : x.entries()) {
      const long double re = a.real(), im = a.imag();
      s1 += std::sqrt(re * re + im * im);
      s2 += re * re + im * im;
    }
    CHECK(std::abs(norm1(x) - static_cast<double>(s1)) <= 4.0 * n * eps * static_cast<double>(s1));
    CHECK(std::abs(norm2_squared(x) - static_cast<double>(s2)) <=
          4.0 * n * eps * static_cast<double>(s2));
  }
}

TEST_CASE("Cauchy-Schwarz and the basic l1-l2 inequality") {
  Gen g(12);
  for (int t = 0; t < 500; ++t) {
    const auto field = g.coin() ? Field::Real : Field::Complex;
    const auto n = g.index(1, 64);
    const auto x = g.vector(field, n);
    const auto y = g.vector(field, n);
    const double bound = norm2(x) * norm2(y);
    CHECK(std::abs(inner(x, y)) <= bound * (1.0 + 1e-12));
    CHECK(norm1(x) <= std::sqrt(static_cast<double>(n)) * norm2(x) * (1.0 + 1e-12));
    CHECK(norm2(x) <= norm1(x) * (1.0 + 1e-15));
    CHECK(std::abs(inner(x, x).real() - norm2_squared(x)) <= 1e-12 * norm2_squared(x));
  }
}

TEST_CASE("matrix helpers") {
  std::vector<Vector> cols{Vector::real({1, 2}), Vector::real({3, 4})};
  const auto m = Matrix::from_columns(cols);
  CHECK(m(0, 1) == Scalar(3.0));
  CHECK(m.apply(Vector::real({1, 1}))[1] == Scalar(6.0));
  const auto p = m * Matrix::identity(2);
  CHECK(max_abs_diff(p, m) == 0.0);
  CHECK(m.adjoint()(1, 0) == Scalar(3.0));
  CHECK(m.trace_real() == 5.0);
}

}  // TEST_SUITE
