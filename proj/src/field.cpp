#include "l1l2/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace l1l2 {

std::string_view to_string(Field f) noexcept {
  return f == Field::Real ? "real" : "complex";
}

Vector::Vector(Field field, std::vector<Scalar> entries)
    : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::Domain, "vector must have at least one entry");
  if (field_ == Field::Real) {
    for (const auto& a : entries_) {
      if (a.imag() != 0.0) {
        throw Error(ErrorKind::FieldMismatch, "real vector has a nonzero imaginary part");
      }
    }
  }
}

Vector Vector::real(std::vector<double> entries) {
  std::vector<Scalar> z(entries.begin(), entries.end());
  return Vector(Field::Real, std::move(z));
}

Vector Vector::complex(std::vector<Scalar> entries) {
  return Vector(Field::Complex, std::move(entries));
}

bool Vector::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& a) { return a == Scalar{}; });
}

Vector Vector::scaled(Scalar alpha) const {
  if (field_ == Field::Real && alpha.imag() != 0.0) {
    throw Error(ErrorKind::FieldMismatch, "complex scale factor applied to a real vector");
  }
  std::vector<Scalar> out(entries_);
  for (auto& a : out) a *= alpha;
  return Vector(field_, std::move(out));
}

Vector operator+(const Vector& a, const Vector& b) {
  require_compatible(a, b);
  std::vector<Scalar> out(a.entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
  return Vector(a.field_, std::move(out));
}

Vector operator-(const Vector& a, const Vector& b) {
  require_compatible(a, b);
  std::vector<Scalar> out(a.entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries_[i];
  return Vector(a.field_, std::move(out));
}

Vector basis_vector(Field field, std::size_t n, std::size_t i) {
  if (i >= n) throw Error(ErrorKind::Dimension, "basis index out of range");
  std::vector<Scalar> e(n);
  e[i] = 1.0;
  return Vector(field, std::move(e));
}

double norm1(const Vector& x) noexcept {
  double s = 0.0;
  for (const auto& a : x.entries()) s += std::abs(a);
  return s;
}

double norm2_squared(const Vector& x) noexcept {
  double s = 0.0;
  for (const auto& a : x.entries()) s += std::norm(a);
  return s;
}

double norm2(const Vector& x) noexcept { return std::sqrt(norm2_squared(x)); }

void require_compatible(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorKind::Dimension, "length mismatch: " + std::to_string(x.size()) + " vs " +
                                          std::to_string(y.size()));
  }
  if (x.field() != y.field()) {
    throw Error(ErrorKind::FieldMismatch, "cannot mix real and complex vectors");
  }
}

Scalar inner(const Vector& x, const Vector& y) {
  require_compatible(x, y);
  Scalar s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw Error(ErrorKind::Dimension, "no columns");
  const std::size_t n = columns.front().size();
  Matrix m(n, columns.size(), columns.front().field());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_compatible(columns.front(), columns[c]);
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return Vector(field_, std::move(v));
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
  return t;
}

double Matrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i).real();
  return t;
}

Vector Matrix::apply(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::Dimension, "matrix-vector shape mismatch");
  if (x.field() != field_) throw Error(ErrorKind::FieldMismatch, "cannot mix real and complex");
  std::vector<Scalar> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s{};
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * x[c];
    y[r] = s;
  }
  return Vector(field_, std::move(y));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::Dimension, "matrix product shape mismatch");
  if (a.field_ != b.field_) throw Error(ErrorKind::FieldMismatch, "cannot mix real and complex");
  Matrix m(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw Error(ErrorKind::Dimension, "matrix shape mismatch");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) d = std::max(d, std::abs(a.data_[i] - b.data_[i]));
  return d;
}

}  // namespace l1l2
