#include "bcforge/linalg.hpp"

#include <utility>

namespace bcforge {

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError(std::string(what) + ": ambient dimensions " +
                         std::to_string(a.ambient_dim()) + " and " +
                         std::to_string(b.ambient_dim()) + " differ");
  }
}

}  // namespace

Echelon rref(Matrix m) {
  Echelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.row_ptr(piv)[c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      Scalar* a = m.row_ptr(piv);
      Scalar* b = m.row_ptr(r);
      for (std::size_t j = c; j < cols; ++j) std::swap(a[j], b[j]);
    }
    Scalar* prow = m.row_ptr(r);
    if (!prow[c].is_one()) {
      Scalar inv = prow[c].inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) prow[j] *= inv;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Scalar* row = m.row_ptr(i);
      if (row[c].is_zero()) continue;
      Scalar f = row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(Matrix(ambient_dim, 0), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) piv[k] = k;
  return Subspace(Matrix::identity(ambient_dim), std::move(piv));
}

Subspace Subspace::span(const Matrix& generators) {
  Echelon e = rref(generators.transpose());
  const std::size_t n = generators.rows();
  Matrix basis(n, e.rank());
  for (std::size_t k = 0; k < e.rank(); ++k) {
    const Scalar* row = e.reduced.row_ptr(k);
    for (std::size_t i = 0; i < n; ++i) basis.row_ptr(i)[k] = row[i];
  }
  return Subspace(std::move(basis), std::move(e.pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return span(Matrix::from_columns(ambient_dim, generators));
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " tested against subspace of ambient dimension " +
                         std::to_string(ambient_dim()));
  }
  Vector out = v;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Scalar f = v[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const Scalar& b = basis_.row_ptr(i)[k];
      if (!b.is_zero()) out[i] -= f * b;
    }
  }
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!bcforge::is_zero(reduce(v))) return std::nullopt;
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Eliminating along the shorter side keeps the working rows short.
  return m.rows() <= m.cols() ? rref(m.transpose()).rank() : rref(m).rank();
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced.row_ptr(k)[f];
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b, "subspace_sum");
  if (b.dim() == 0) return a;
  if (a.dim() == 0) return b;
  return Subspace::span(Matrix::hstack(a.basis(), b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b, "subspace_intersection");
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);
  // Rows [a_k | a_k] and [b_k | 0]; after elimination, the rows whose left
  // half vanishes carry a basis of the intersection in their right half.
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      z.row_ptr(k)[i] = a.basis().row_ptr(i)[k];
      z.row_ptr(k)[n + i] = a.basis().row_ptr(i)[k];
    }
  }
  for (std::size_t k = 0; k < b.dim(); ++k) {
    for (std::size_t i = 0; i < n; ++i) z.row_ptr(a.dim() + k)[i] = b.basis().row_ptr(i)[k];
  }
  Echelon e = rref(std::move(z));
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < e.rank(); ++k) {
    if (e.pivots[k] < n) continue;
    const Scalar* row = e.reduced.row_ptr(k);
    gens.emplace_back(row + n, row + 2 * n);
  }
  return Subspace::span(n, gens);
}

bool is_member(const Vector& v, const Subspace& s) { return is_zero(s.reduce(v)); }

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b, "is_subspace_of");
  if (a.dim() > b.dim()) return false;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (!is_member(a.vector(k), b)) return false;
  }
  return true;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw DimensionError("solve: right-hand side of length " + std::to_string(b.size()) +
                         " for matrix with " + std::to_string(m.rows()) + " rows");
  }
  const std::size_t n = m.cols();
  Echelon e = rref(Matrix::hstack(m, Matrix::column_vector(b)));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced.row_ptr(k)[n];
  return x;
}

Matrix conjugate_transpose(const Matrix& m) { return m.conjugate_transpose(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = rref(Matrix::hstack(m, Matrix::identity(n)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw std::domain_error("matrix is singular");
  }
  return e.reduced.block(0, n, n, n);
}

Subspace image(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw DimensionError("image: matrix with " + std::to_string(m.cols()) +
                         " columns applied to subspace of ambient dimension " +
                         std::to_string(s.ambient_dim()));
  }
  return Subspace::span(m * s.basis());
}

Subspace complement_in(const Subspace& super, const Subspace& sub) {
  check_same_ambient(super, sub, "complement_in");
  std::vector<Vector> gens;
  gens.reserve(super.dim());
  for (std::size_t k = 0; k < super.dim(); ++k) gens.push_back(sub.reduce(super.vector(k)));
  return Subspace::span(super.ambient_dim(), gens);
}

}  // namespace bcforge
