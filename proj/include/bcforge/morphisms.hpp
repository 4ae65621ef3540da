#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "bcforge/complex.hpp"

namespace bcforge {

/// Raised when a precondition stated by an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an induced map fails its well-definedness re-check.
class WellDefinednessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Bidegree-preserving linear map between two double complexes. Block (p,q)
/// maps source coordinates at (p,q) to target coordinates at (p,q).
class ComplexMap {
 public:
  ComplexMap(BigradedComplex source, BigradedComplex target, std::map<Bidegree, Matrix> blocks,
             bool inclusion = false);

  static ComplexMap identity(const BigradedComplex& c);
  static ComplexMap zero(const BigradedComplex& source, const BigradedComplex& target);

  const BigradedComplex& source() const { return source_; }
  const BigradedComplex& target() const { return target_; }
  bool is_inclusion() const { return inclusion_; }

  Matrix block(Bidegree b) const;
  /// The map Tot^k(source) -> Tot^k(target).
  Matrix tot_block(int k) const;
  /// Union of both supports.
  std::vector<Bidegree> bidegrees() const;

 private:
  BigradedComplex source_;
  BigradedComplex target_;
  std::map<Bidegree, Matrix> blocks_;
  bool inclusion_ = false;
};

/// Chain-map identities del F = F del and delbar F = F delbar, plus injectivity
/// of every block when the map is flagged as an inclusion.
std::vector<Violation> check_map(const ComplexMap& m);

struct InducedMap {
  /// Columns: source classes; rows: target classes (in representative bases).
  Matrix matrix;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  bool injective = true;
  bool surjective = true;
  bool bijective() const { return injective && surjective; }
};

/// Map induced on a theory at a bidegree (de Rham: total degree of `at`),
/// after re-verifying that cocycles go to cocycles and coboundaries to
/// coboundaries.
InducedMap induced_map(const ComplexMap& m, Theory t, Bidegree at);

bool rows_quasi_iso(const ComplexMap& m);
bool cols_quasi_iso(const ComplexMap& m);
/// Surjectivity of the induced map on pure-type de Rham subquotients at (p,q).
bool condition3_surjective(const ComplexMap& m, int p, int q);
InducedMap induced_bc_map(const ComplexMap& m, int p, int q);
/// Bijectivity of the map induced on de Rham cohomology in every degree.
bool total_cohomology_bijective(const ComplexMap& m);

struct DelbarSplit {
  Vector phi_tilde;  ///< coordinates in C^{p,q}
  Vector phi_hat;    ///< coordinates in A^{p,q-1}
};

/// For an inclusion C -> A whose columns are quasi-isomorphic and phi in
/// A^{p,q} with delbar(phi) in C, finds phi = phi_tilde + delbar(phi_hat)
/// with phi_tilde in C. The identity is verified exactly before returning.
DelbarSplit split_modulo_delbar(const ComplexMap& m, const Vector& phi, int p, int q);

}  // namespace bcforge
