#pragma once

// Seeded generators of valid double complexes, built as direct sums of
// indecomposable shapes (squares and zigzags) and then mixed by random
// changes of basis. Used by the property suites and by `bcforge --seed`.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "bcforge/morphisms.hpp"
#include "bcforge/pd.hpp"

namespace bcforge::synthetic {

/// A square x, del x, delbar x, del delbar x with x at `at`, or a zigzag of
/// `sources` generators on the antidiagonal through `at` (the first source
/// sits at `at`, the next one step up-left) with their closed targets; the
/// first and last target may be dropped.
struct Shape {
  enum class Kind { Square, Zigzag } kind = Kind::Square;
  Bidegree at;
  int sources = 1;
  bool drop_first = false;
  bool drop_last = false;

  /// Bidegrees of the generators in creation order.
  std::vector<Bidegree> positions() const;
};

/// Direct sums of shapes with per-generator bookkeeping. Every generator has
/// a level; the generators of level >= l span a sub-complex when the levels
/// are assigned through add_shape / mark_random_closed_subset.
class ShapeBuilder {
 public:
  std::size_t add(Bidegree b, int level);
  void add_del(std::size_t from, std::size_t to, const Scalar& c);
  void add_delbar(std::size_t from, std::size_t to, const Scalar& c);

  /// Adds the generators of `s` with nonzero coefficients from `rng`; returns their ids.
  std::vector<std::size_t> add_shape(const Shape& s, std::mt19937_64& rng, int level);
  /// Raises a random d-closed subset of `ids` (closed under taking
  /// differentials) to at least `level`.
  void mark_random_closed_subset(const std::vector<std::size_t>& ids, std::mt19937_64& rng,
                                 int level);

  /// Adds 1 at (0,0), v at (n,n) (both at `top_level`), and for every existing
  /// generator g at (p,q) a dual generator at (n-p,n-q) of the same level
  /// carrying the transposed, signed differentials. Records the pairing
  /// g ^ g_dual = v and g_dual ^ g = (-1)^{p+q} v.
  void close_under_duality(int n, int top_level);

  /// Complex spanned by the generators of level >= min_level.
  BigradedComplex build(int min_level = 0) const;
  /// Coordinate inclusion of build(min_level) into build(0).
  std::map<Bidegree, Matrix> inclusion_blocks(int min_level) const;
  /// Pairing matrices of build(min_level).
  std::map<Bidegree, Matrix> pairing(int n, int min_level = 0) const;

  std::size_t size() const { return gens_.size(); }

 private:
  struct Gen {
    Bidegree at;
    int level;
  };
  struct Edge {
    std::size_t from, to;
    Scalar c;
    bool del;
  };
  std::map<Bidegree, std::vector<std::size_t>> by_bidegree(int min_level) const;

  std::vector<Gen> gens_;
  std::vector<Edge> edges_;
  // (g, h, coefficient of g ^ h along v).
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> pairs_;
};

/// Draws a shape whose generators all satisfy `allowed`.
Shape random_shape(std::mt19937_64& rng, int box, const std::function<bool(Bidegree)>& allowed,
                   double square_weight = 1.0);

/// Random unitary matrix over Q(i): products of phases, swaps and rational rotations.
Matrix random_unitary(std::mt19937_64& rng, std::size_t n);
/// Random invertible matrix: unit lower times unit upper triangular.
Matrix random_invertible(std::mt19937_64& rng, std::size_t n);

/// Applies the change of basis e' = e * U_b at every bidegree, given U_b and its inverse.
BigradedComplex change_basis(const BigradedComplex& c, const std::map<Bidegree, Matrix>& u,
                             const std::map<Bidegree, Matrix>& u_inv);

/// Valid double complex in [0,box]^2 mixed by invertible changes of basis.
BigradedComplex random_double_complex(std::uint64_t seed, int box = 3);

struct PairedInstance {
  PairedComplex ambient;
  PairedComplex sub;  ///< star-closed paired sub-complex
  ComplexMap inclusion;
};

/// Paired complex K + K^dual + {1, v} in [0,n]^2 with a unitary change of basis,
/// and a star-closed sub-complex K1 + K1^dual + {1, v}.
PairedInstance random_paired_instance(std::uint64_t seed, int n = 3);

struct TransferInstance {
  BigradedComplex sub;
  BigradedComplex ambient;
  ComplexMap inclusion;
};

/// Ambient = core + extra shapes (biased towards squares); the sub-complex is
/// the core plus a random closed part of the extra shapes; both mixed by
/// invertible changes of basis.
TransferInstance random_transfer_instance(std::uint64_t seed, int box = 3);

struct SubisoInstance {
  PairedComplex a, b, c;
  ComplexMap b_into_a;
  ComplexMap c_into_a;
};

/// Star-closed chain B in C in A of paired complexes built from shapes.
SubisoInstance random_subiso_instance(std::uint64_t seed, int n = 3);

}  // namespace bcforge::synthetic
