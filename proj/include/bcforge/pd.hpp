#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "bcforge/complex.hpp"

namespace bcforge {

/// Conjugate-linear map x -> matrix * conj(x).
///
/// Composition rules, with L a linear matrix:
///   L o A       = (L * A.matrix), conjugate-linear
///   A o L       = (A.matrix * conj(L)), conjugate-linear
///   A o B       = A.matrix * conj(B.matrix), linear
struct ConjLinearMap {
  Matrix matrix;

  Vector apply(const Vector& x) const { return matrix * bcforge::conj(x); }
  ConjLinearMap after(const Matrix& linear) const { return {matrix * linear.conj()}; }
  ConjLinearMap before(const Matrix& linear) const { return {linear * matrix}; }
  Matrix after(const ConjLinearMap& other) const { return matrix * other.matrix.conj(); }
};

/// Thrown when an operation needs the pd-type axioms and they fail.
class InvalidPairing : public std::runtime_error {
 public:
  explicit InvalidPairing(const std::vector<Violation>& v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Double complex with a wedge pairing into the one-dimensional top piece
/// A^{n,n} = C<v>, and the conjugate-linear star it induces when the stored
/// basis is declared orthonormal.
class PairedComplex {
 public:
  PairedComplex() = default;
  /// `pairing[(p,q)]` is P with P(i,j) the coefficient of g_i ^ h_j along v,
  /// for g_i the basis of A^{p,q} and h_j the basis of A^{n-p,n-q}.
  PairedComplex(BigradedComplex base, int n, std::map<Bidegree, Matrix> pairing);

  const BigradedComplex& base() const { return base_; }
  int n() const { return n_; }
  Bidegree dual(Bidegree b) const { return {n_ - b.p, n_ - b.q}; }

  Matrix pairing(Bidegree b) const;
  /// The conjugate-linear star A^{p,q} -> A^{n-p,n-q}; its matrix is the
  /// inverse of the pairing matrix. Requires the axioms.
  ConjLinearMap star(Bidegree b) const;

  /// Cached check_pd_axioms result.
  const std::vector<Violation>& violations() const;
  void require_axioms() const;

 private:
  BigradedComplex base_;
  int n_ = 0;
  std::map<Bidegree, Matrix> pairing_;

  struct Cache {
    std::once_flag once;
    std::vector<Violation> violations;
    std::map<Bidegree, Matrix> star;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  void fill_cache(Cache& cache) const;
};

/// Violations of: one-dimensional A^{0,0} and A^{n,n}, support inside [0,n]^2,
/// square invertible pairings, d = 0 on Tot^0 and into Tot^{2n}.
std::vector<Violation> check_pd_axioms(const PairedComplex& pc);

enum class Differential { Del, Delbar };

/// Thrown when the two adjoint computations disagree.
class AdjointMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjoint of del or delbar out of A^{p,q}, as a map A^{p,q} -> A^{p-1,q}
/// (resp. A^{p,q-1}). Computed both as a conjugate transpose and as
/// -star o d o star; the two must agree.
Matrix adjoint(const PairedComplex& pc, Differential which, int p, int q);

/// -star o d o star alone, without the comparison.
Matrix adjoint_via_star(const PairedComplex& pc, Differential which, int p, int q);

enum class LaplacianKind { DeRham, Del, Delbar, BottChern, Aeppli };

std::string laplacian_key(LaplacianKind k);
const std::vector<LaplacianKind>& all_laplacians();

/// Self-adjoint operator on A^{p,q}; for DeRham the operator acts on
/// Tot^{p+q} instead.
Matrix laplacian(const PairedComplex& pc, LaplacianKind kind, int p, int q);
/// dim ker of laplacian(pc, kind, p, q).
std::size_t laplacian_kernel_dim(const PairedComplex& pc, LaplacianKind kind, int p, int q);
/// dim ker of the de Rham Laplacian on Tot^k.
std::size_t laplacian_kernel_dim_total(const PairedComplex& pc, int k);

/// ker L intersect im L = 0 and dim ker L + dim im L = dim.
bool check_harmonic_decomposition(const Matrix& l);
bool check_harmonic_decomposition(const PairedComplex& pc, LaplacianKind kind, int p, int q);

struct DualityMismatch {
  Bidegree at;
  std::size_t h_bc = 0;
  std::size_t h_aeppli_dual = 0;
  bool intertwines = true;
};

/// Compares h_BC(p,q) with h_A(n-p,n-q) and checks
/// star o Laplacian_BC = Laplacian_A o star at every (p,q) in [0,n]^2.
std::vector<DualityMismatch> star_duality_check(const PairedComplex& pc);

}  // namespace bcforge
