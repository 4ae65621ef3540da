#include <doctest.h>

#include "bcforge/pd.hpp"
#include "bcforge/synthetic.hpp"
#include "support.hpp"

using namespace bcforge;

namespace {

// n = 1 complex: 1 at (0,0), a at (1,0), b at (0,1), v at (1,1), zero differentials.
PairedComplex torus_like(bool degenerate) {
  BigradedComplex c;
  c.add_space({0, 0}, {"1"});
  c.add_space({1, 0}, {"a"});
  c.add_space({0, 1}, {"b"});
  c.add_space({1, 1}, {"v"});
  std::map<Bidegree, Matrix> p;
  p[{0, 0}] = Matrix{{1}};
  p[{1, 1}] = Matrix{{1}};
  p[{1, 0}] = Matrix{{degenerate ? 0 : 1}};
  p[{0, 1}] = Matrix{{degenerate ? 0 : -1}};
  return PairedComplex(c, 1, p);
}

Scalar norm2(const Vector& v) { return hermitian(v, v); }

}  // namespace

TEST_CASE("pd axioms on small complexes") {
  CHECK(check_pd_axioms(torus_like(false)).empty());
  auto v = check_pd_axioms(torus_like(true));
  REQUIRE(v.size() == 2);
  CHECK(v[0].identity == "pairing nondegenerate");

  BigradedComplex c;
  c.add_space({0, 0}, {"1"});
  c.add_space({1, 1}, {"v", "w"});
  auto bad = check_pd_axioms(PairedComplex(c, 1, {}));
  bool top = false;
  for (const auto& x : bad) top |= x.identity == "dim A^{n,n} = 1";
  CHECK(top);
}

TEST_CASE("zero differential has zero adjoint") {
  PairedComplex pc = torus_like(false);
  CHECK(adjoint(pc, Differential::Del, 1, 0).is_zero());
  CHECK(adjoint(pc, Differential::Delbar, 1, 1).is_zero());
  CHECK(laplacian_kernel_dim(pc, LaplacianKind::BottChern, 1, 0) == 1);
  CHECK(star_duality_check(pc).empty());
}

TEST_CASE("random paired complexes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    auto inst = synthetic::random_paired_instance(seed);
    const PairedComplex& pc = inst.ambient;
    const BigradedComplex& c = pc.base();
    REQUIRE(validate(c).empty());
    REQUIRE(check_pd_axioms(pc).empty());
    REQUIRE(check_pd_axioms(inst.sub).empty());
    std::mt19937_64 rng(seed);
    for (const Bidegree& b : antidiagonal_order(pc.n())) {
      Matrix ds = adjoint(pc, Differential::Del, b.p, b.q);
      Matrix dbs = adjoint(pc, Differential::Delbar, b.p, b.q);
      // <del x, y> = <x, del* y> for x in A^{p-1,q}, y in A^{p,q}.
      Vector x = testsupport::random_vector(rng, c.dim({b.p - 1, b.q}));
      Vector y = testsupport::random_vector(rng, c.dim(b));
      CHECK(hermitian(c.del({b.p - 1, b.q}) * x, y) == hermitian(x, ds * y));
      Vector x2 = testsupport::random_vector(rng, c.dim({b.p, b.q - 1}));
      CHECK(hermitian(c.delbar({b.p, b.q - 1}) * x2, y) == hermitian(x2, dbs * y));

      CHECK(laplacian_kernel_dim(pc, LaplacianKind::Delbar, b.p, b.q) == h_delbar(c, b.p, b.q).dimension);
      CHECK(laplacian_kernel_dim(pc, LaplacianKind::Del, b.p, b.q) == h_del(c, b.p, b.q).dimension);
      CHECK(laplacian_kernel_dim(pc, LaplacianKind::BottChern, b.p, b.q) ==
            h_bott_chern(c, b.p, b.q).dimension);
      CHECK(laplacian_kernel_dim(pc, LaplacianKind::Aeppli, b.p, b.q) == h_aeppli(c, b.p, b.q).dimension);
      for (LaplacianKind k : all_laplacians()) CHECK(check_harmonic_decomposition(pc, k, b.p, b.q));

      // <L_BC y, y> as a sum of six squared norms.
      Matrix dd_in = c.del_delbar({b.p - 1, b.q - 1});
      Matrix dd_out = c.del_delbar(b);
      Matrix g_in = c.delbar(b).conjugate_transpose() * c.del({b.p - 1, b.q + 1});
      Matrix g_out = c.delbar({b.p + 1, b.q - 1}).conjugate_transpose() * c.del(b);
      Scalar six = norm2(dd_in.conjugate_transpose() * y) + norm2(dd_out * y) +
                   norm2(g_in.conjugate_transpose() * y) + norm2(g_out * y) + norm2(c.delbar(b) * y) +
                   norm2(c.del(b) * y);
      CHECK(hermitian(laplacian(pc, LaplacianKind::BottChern, b.p, b.q) * y, y) == six);

      Subspace harmonic = kernel(laplacian(pc, LaplacianKind::BottChern, b.p, b.q));
      Subspace triple = kernel(Matrix::vstack(Matrix::vstack(c.del(b), c.delbar(b)), dd_in.conjugate_transpose()));
      CHECK(harmonic == triple);
    }
    for (int k = 0; k <= 2 * pc.n(); ++k) {
      CHECK(laplacian_kernel_dim_total(pc, k) == h_deRham(c, k).dimension);
    }
    CHECK(star_duality_check(pc).empty());
  }
}

TEST_CASE("harmonic decomposition detects a non-self-adjoint operator") {
  CHECK_FALSE(check_harmonic_decomposition(Matrix{{0, 1}, {0, 0}}));
  CHECK(check_harmonic_decomposition(Matrix{{1, 0}, {0, 0}}));
  CHECK(check_harmonic_decomposition(Matrix(0, 0)));
}

TEST_CASE("inconsistent star is caught by the dual-path adjoint") {
  auto inst = synthetic::random_paired_instance(5);
  const BigradedComplex& c = inst.ambient.base();
  std::map<Bidegree, Matrix> p;
  for (const Bidegree& b : antidiagonal_order(3)) p[b] = inst.ambient.pairing(b).scaled(2);
  p[{0, 0}] = inst.ambient.pairing({0, 0});
  PairedComplex scaled(c, 3, p);
  bool mismatch = false;
  for (const Bidegree& b : antidiagonal_order(3)) {
    try {
      adjoint(scaled, Differential::Del, b.p, b.q);
      adjoint(scaled, Differential::Delbar, b.p, b.q);
    } catch (const AdjointMismatch&) {
      mismatch = true;
    }
  }
  bool has_differential = false;
  for (const Bidegree& b : c.support()) has_differential |= !c.del(b).is_zero() || !c.delbar(b).is_zero();
  CHECK(mismatch == has_differential);
}
