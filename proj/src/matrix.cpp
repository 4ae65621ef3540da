#include "bcforge/matrix.hpp"

#include <ostream>
#include <sstream>

namespace bcforge {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.data_[k * n + k] = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) {
      throw DimensionError("column " + std::to_string(c) + " has length " +
                           std::to_string(columns[c].size()) + ", expected " +
                           std::to_string(rows));
    }
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.cols_ + c] = columns[c][r];
  }
  return m;
}

Matrix Matrix::column_vector(const Vector& v) { return from_columns(v.size(), {v}); }

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + shape(*this) + " matrix");
  }
  return data_[r * cols_ + c];
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") outside " + shape(*this) + " matrix");
  }
  return data_[r * cols_ + c];
}

Vector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

Vector Matrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

Matrix Matrix::conj() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].conj();
  return m;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c].conj();
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) {
    throw DimensionError("cannot multiply " + shape(*this) + " by " + shape(o));
  }
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar* a = row_ptr(r);
    Scalar* dst = out.row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (a[k].is_zero()) continue;
      const Scalar* b = o.row_ptr(k);
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!b[c].is_zero()) dst[c] += a[k] * b[c];
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) {
    throw DimensionError("cannot apply " + shape(*this) + " matrix to vector of length " +
                         std::to_string(v.size()));
  }
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const Scalar* a = row_ptr(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!a[k].is_zero() && !v[k].is_zero()) out[r] += a[k] * v[k];
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("cannot add " + shape(*this) + " and " + shape(o));
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("cannot subtract " + shape(o) + " from " + shape(*this));
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& s : out.data_) s = -s;
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack of " + shape(a) + " and " + shape(b));
  Matrix out(a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack of " + shape(a) + " and " + shape(b));
  Matrix out(a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) {
    throw DimensionError("block " + shape(block) + " does not fit in " + shape(*this));
  }
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j)
      data_[(r + i) * cols_ + c + j] = block.data_[i * block.cols_ + j];
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const {
  if (r + rows > rows_ || c + cols > cols_) {
    throw DimensionError("block request outside " + shape(*this));
  }
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.data_[i * cols + j] = data_[(r + i) * cols_ + c + j];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in addition");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in subtraction");
  Vector out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vector conj(const Vector& v) {
  Vector out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Scalar hermitian(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch in inner product");
  Scalar acc;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k].conj();
  return acc;
}

}  // namespace bcforge
