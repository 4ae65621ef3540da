#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcforge/scalar.hpp"

namespace bcforge {

using Vector = std::vector<Scalar>;

/// Raised when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense matrix over Q(i). Zero-row and zero-column shapes are legal and
/// stand for the zero map into or out of the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Builds a matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix column_vector(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  /// Bounds-checked access; out-of-range indices throw std::out_of_range.
  const Scalar& at(std::size_t r, std::size_t c) const;
  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }
  Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;

  bool is_zero() const;

  Matrix transpose() const;
  Matrix conj() const;
  Matrix conjugate_transpose() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  /// Horizontal concatenation [a | b]; row counts must match.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  /// Vertical concatenation; column counts must match.
  static Matrix vstack(const Matrix& a, const Matrix& b);

  /// Copies `block` into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block);
  Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

  // Unchecked row-major storage for the elimination kernels.
  Scalar* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const Scalar& s);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);
/// Hermitian inner product sum_i a_i * conj(b_i).
Scalar hermitian(const Vector& a, const Vector& b);

}  // namespace bcforge
