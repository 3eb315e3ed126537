#pragma once

// Scalar fields and dense vector/matrix primitives.
//
// Every entry is stored as std::complex<double>. A Vector carries a field tag
// fixed at construction; for Field::Real the imaginary parts are identically
// zero and operations refuse to mix the two fields.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "l1l2/error.hpp"

namespace l1l2 {

using Scalar = std::complex<double>;

enum class Field { Real, Complex };

std::string_view to_string(Field f) noexcept;

inline double modulus(const Scalar& s) noexcept { return std::abs(s); }

class Vector {
 public:
  /// Real vector. Throws Domain for an empty list.
  static Vector real(std::vector<double> entries);
  static Vector real(std::initializer_list<double> entries) {
    return real(std::vector<double>(entries));
  }
  /// Complex vector. Throws Domain for an empty list.
  static Vector complex(std::vector<Scalar> entries);

  /// Generic constructor; for Field::Real every imaginary part must be exactly 0.
  Vector(Field field, std::vector<Scalar> entries);

  Field field() const noexcept { return field_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  bool is_zero() const noexcept;

  Vector scaled(Scalar alpha) const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);

 private:
  Field field_;
  std::vector<Scalar> entries_;
};

/// Standard basis vector e_i (0-based) of R^n or C^n.
Vector basis_vector(Field field, std::size_t n, std::size_t i);

double norm1(const Vector& x) noexcept;
double norm2(const Vector& x) noexcept;
double norm2_squared(const Vector& x) noexcept;

/// <x, y> = sum x_i conj(y_i); linear in x, conjugate-linear in y.
Scalar inner(const Vector& x, const Vector& y);

/// Throws Dimension / FieldMismatch when x and y cannot be combined.
void require_compatible(const Vector& x, const Vector& y);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, Field field = Field::Real);

  static Matrix identity(std::size_t n, Field field = Field::Real);
  /// Matrix whose columns are the given vectors (equal length, same field).
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Field field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> data() const noexcept { return data_; }

  Vector column(std::size_t c) const;
  Matrix adjoint() const;
  double trace_real() const;

  Vector apply(const Vector& x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  /// max |a_ij - b_ij|; shapes must match.
  friend double max_abs_diff(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  Field field_;
  std::vector<Scalar> data_;
};

}  // namespace l1l2
