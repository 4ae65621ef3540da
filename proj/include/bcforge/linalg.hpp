#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcforge/matrix.hpp"

namespace bcforge {

/// Reduced row echelon form with the pivot column of every nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
Echelon rref(Matrix m);

/// Linear subspace of Q(i)^n held in canonical reduced column-echelon form:
/// column k has a 1 in row pivots()[k], zeros in every other pivot row and
/// zeros above its pivot. Equal subspaces have identical stored bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the columns of `generators`.
  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t k) const { return basis_.column(k); }
  std::vector<Vector> vectors() const { return basis_.columns(); }

  /// Coefficients of v in the stored basis, or nullopt when v is not a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its component along the pivots of this subspace. Zero iff v is a member.
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
Subspace kernel(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus intersection.
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool is_member(const Vector& v, const Subspace& s);
bool is_subspace_of(const Subspace& a, const Subspace& b);
/// Some x with m x = b, or nullopt if b is not in the column space of m.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
Matrix conjugate_transpose(const Matrix& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Image m(s) of a subspace of the source of m.
Subspace image(const Matrix& m, const Subspace& s);
/// Canonical complement of `sub` inside `super`: the span of the reductions
/// of super's basis modulo sub. Requires sub to be contained in super.
Subspace complement_in(const Subspace& super, const Subspace& sub);

}  // namespace bcforge
