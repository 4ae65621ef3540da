#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcforge/linalg.hpp"

namespace bcforge {

struct Bidegree {
  int p = 0;
  int q = 0;
  int total() const { return p + q; }
  auto operator<=>(const Bidegree&) const = default;
};

std::string to_string(const Bidegree& b);

/// One failed identity, localized at a bidegree (or a total degree).
struct Violation {
  std::string identity;
  Bidegree at;
  std::string detail;
  std::string to_string() const;
};

/// Thrown by cohomology queries on a complex that does not validate.
class InvalidComplex : public std::runtime_error {
 public:
  explicit InvalidComplex(const std::vector<Violation>& v);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Bounded double complex with anticommuting differentials
/// del: A^{p,q} -> A^{p+1,q} and delbar: A^{p,q} -> A^{p,q+1}.
///
/// Bidegrees that were never added are zero spaces. The optional conjugation
/// is conjugate-linear: conj(p,q) is the matrix M with x -> M * conj(x),
/// mapping A^{p,q} to A^{q,p}.
class BigradedComplex {
 public:
  void add_space(Bidegree b, std::vector<std::string> labels);
  void set_del(Bidegree src, Matrix m);
  void set_delbar(Bidegree src, Matrix m);
  void set_conj(Bidegree src, Matrix m);

  std::size_t dim(Bidegree b) const;
  const std::vector<std::string>& labels(Bidegree b) const;
  /// Bidegrees carrying a nonzero space, in lexicographic order.
  std::vector<Bidegree> support() const;
  std::size_t total_dim() const;

  /// Matrix of del out of `src`, of shape dim(p+1,q) x dim(p,q).
  Matrix del(Bidegree src) const;
  Matrix delbar(Bidegree src) const;
  /// del o delbar out of `src`, landing in (p+1,q+1).
  Matrix del_delbar(Bidegree src) const;

  bool has_conj() const { return has_conj_; }
  /// Matrix of the conjugation out of `src`; zero-sized where unset.
  Matrix conj(Bidegree src) const;
  bool conj_defined_at(Bidegree src) const { return conj_.count(src) != 0; }

  /// Summands of Tot^k ordered by increasing p, with their row offsets.
  struct TotSummand {
    Bidegree bidegree;
    std::size_t offset;
    std::size_t dim;
  };
  std::vector<TotSummand> tot_layout(int k) const;
  std::size_t tot_dim(int k) const;
  /// Matrix of d = del + delbar from Tot^k to Tot^{k+1}.
  Matrix d_total(int k) const;
  /// Embeds A^{p,q} into Tot^{p+q}.
  Matrix tot_inclusion(Bidegree b) const;

  /// Smallest and largest total degree carrying a nonzero space; (0,-1) if empty.
  std::pair<int, int> degree_range() const;

  /// Cached result of validate(); safe to call from several threads.
  const std::vector<Violation>& violations() const;
  bool is_valid() const { return violations().empty(); }
  void require_valid() const;

 private:
  void invalidate();

  std::map<Bidegree, std::vector<std::string>> spaces_;
  std::map<Bidegree, Matrix> del_;
  std::map<Bidegree, Matrix> delbar_;
  std::map<Bidegree, Matrix> conj_;
  bool has_conj_ = false;

  struct Cache {
    std::once_flag once;
    std::vector<Violation> violations;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// All failed complex identities: del^2, delbar^2, anticommutation and, when a
/// conjugation is present, involution and intertwining.
std::vector<Violation> validate(const BigradedComplex& c);

struct CohomologyResult {
  std::optional<Bidegree> bidegree;
  int degree = 0;
  std::size_t dimension = 0;
  /// Cocycles whose classes form a basis of the quotient.
  Subspace representatives;
};

CohomologyResult h_delbar(const BigradedComplex& c, int p, int q);
CohomologyResult h_del(const BigradedComplex& c, int p, int q);
CohomologyResult h_deRham(const BigradedComplex& c, int k);
CohomologyResult h_bott_chern(const BigradedComplex& c, int p, int q);
CohomologyResult h_aeppli(const BigradedComplex& c, int p, int q);
std::size_t h_pure_type(const BigradedComplex& c, int p, int q);
/// First page of the spectral sequence of the column filtration
/// F^p Tot = sum over p' >= p of A^{p',*}, computed from the filtration alone.
std::size_t frolicher_e1(const BigradedComplex& c, int p, int q);

/// Cocycle subspaces and their coboundaries, shared by the functors above and
/// by the morphism layer.
Subspace bc_cocycles(const BigradedComplex& c, Bidegree b);
Subspace bc_coboundaries(const BigradedComplex& c, Bidegree b);
Subspace aeppli_cocycles(const BigradedComplex& c, Bidegree b);
Subspace aeppli_coboundaries(const BigradedComplex& c, Bidegree b);

struct DdbarDegrees {
  /// k -> sum over p+q=k of (h_BC + h_A) - 2 b_k.
  std::map<int, std::int64_t> by_degree;
  /// One entry per degree where the value is negative.
  std::vector<Violation> violations;
};

DdbarDegrees ddbar_degrees(const BigradedComplex& c);
bool satisfies_ddbar_lemma(const BigradedComplex& c);

enum class Theory { DeRham, Del, Delbar, BottChern, Aeppli, E1, Pure };

/// Cocycles and coboundaries whose quotient is the theory at a position.
/// `total` marks spaces living in Tot^k (de Rham, E1) rather than A^{p,q}.
/// De Rham is indexed by the total degree of `at`.
struct QuotientSpaces {
  Subspace cocycles;
  Subspace coboundaries;
  bool total = false;
  std::size_t dimension() const { return cocycles.dim() - coboundaries.dim(); }
};

QuotientSpaces quotient_spaces(const BigradedComplex& c, Theory t, Bidegree at);

std::string theory_key(Theory t);
std::optional<Theory> parse_theory(const std::string& key);
const std::vector<Theory>& all_theories();
bool is_bigraded(Theory t);

/// Bidegrees (p,q) with 0 <= p,q <= n, grouped by total degree and ordered by
/// decreasing p within each group: (0,0), (1,0), (0,1), (2,0), (1,1), ...
std::vector<Bidegree> antidiagonal_order(int n);

struct CohomologyTable {
  int n = 0;
  std::vector<Bidegree> bidegrees;
  std::vector<Theory> theories;
  /// Per bigraded theory, dims in `bidegrees` order.
  std::map<Theory, std::vector<std::size_t>> bigraded;
  /// Per theory, total dims for k = 0..2n (antidiagonal sums for bigraded theories).
  std::map<Theory, std::vector<std::size_t>> totals;
  std::optional<DdbarDegrees> ddbar;
};

/// Computes the requested theories on [0,n]^2, parallelized per bidegree over
/// up to `threads` workers (0 means use the BCFORGE_THREADS default).
CohomologyTable compute_table(const BigradedComplex& c, int n, const std::vector<Theory>& theories,
                              bool with_ddbar, unsigned threads = 0);

}  // namespace bcforge
