#include <doctest.h>

#include "bcforge/morphisms.hpp"
#include "bcforge/synthetic.hpp"
#include "support.hpp"

using namespace bcforge;

namespace {

bool transfer_hypotheses(const ComplexMap& m, Bidegree b) {
  return rows_quasi_iso(m) && cols_quasi_iso(m) && condition3_surjective(m, b.p, b.q);
}

}  // namespace

TEST_CASE("identity and zero maps") {
  BigradedComplex c = synthetic::random_double_complex(3);
  ComplexMap id = ComplexMap::identity(c);
  CHECK(check_map(id).empty());
  CHECK(rows_quasi_iso(id));
  CHECK(cols_quasi_iso(id));
  CHECK(total_cohomology_bijective(id));
  for (const Bidegree& b : c.support()) {
    CHECK(induced_bc_map(id, b.p, b.q).bijective());
    CHECK(condition3_surjective(id, b.p, b.q));
    auto m = induced_map(id, Theory::Aeppli, b);
    CHECK(m.matrix == Matrix::identity(m.source_dim));
  }

  ComplexMap z = ComplexMap::zero(BigradedComplex(), c);
  CHECK(check_map(z).empty());
  bool has_del = false, has_delbar = false, has_pure = false;
  for (const Bidegree& b : c.support()) {
    has_del |= h_del(c, b.p, b.q).dimension > 0;
    has_delbar |= h_delbar(c, b.p, b.q).dimension > 0;
    if (h_pure_type(c, b.p, b.q) > 0) {
      has_pure = true;
      CHECK_FALSE(condition3_surjective(z, b.p, b.q));
    }
  }
  CHECK(rows_quasi_iso(z) == !has_del);
  CHECK(cols_quasi_iso(z) == !has_delbar);
  (void)has_pure;
}

TEST_CASE("non-chain maps are reported") {
  BigradedComplex c;
  c.add_space({0, 0}, {"x"});
  c.add_space({1, 0}, {"y"});
  c.set_del({0, 0}, Matrix{{1}});
  ComplexMap bad(c, c, {{{0, 0}, Matrix{{1}}}, {{1, 0}, Matrix{{2}}}});
  auto v = check_map(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].at == Bidegree{0, 0});
  ComplexMap notinj(c, c, {{{0, 0}, Matrix{{0}}}, {{1, 0}, Matrix{{0}}}}, true);
  CHECK(check_map(notinj).size() == 2);
  CHECK_THROWS_AS(ComplexMap(c, c, {{{0, 0}, Matrix(2, 1)}}), DimensionError);
}

TEST_CASE("surjectivity transfer on generated inclusions") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 400 && checked < 120; ++seed) {
    CAPTURE(seed);
    auto inst = synthetic::random_transfer_instance(seed);
    REQUIRE(check_map(inst.inclusion).empty());
    for (const Bidegree& b : inst.ambient.support()) {
      if (!transfer_hypotheses(inst.inclusion, b)) continue;
      ++checked;
      CHECK(induced_bc_map(inst.inclusion, b.p, b.q).surjective);
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("total cohomology bijective when columns are quasi-isomorphic") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CAPTURE(seed);
    auto inst = synthetic::random_transfer_instance(seed);
    if (!cols_quasi_iso(inst.inclusion)) continue;
    ++checked;
    CHECK(total_cohomology_bijective(inst.inclusion));
  }
  CHECK(checked >= 100);
}

TEST_CASE("star-closed sub-complexes inject on Bott-Chern cohomology") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    auto inst = synthetic::random_paired_instance(seed);
    REQUIRE(check_map(inst.inclusion).empty());
    REQUIRE(check_pd_axioms(inst.sub).empty());
    for (const Bidegree& b : antidiagonal_order(3)) {
      CHECK(induced_bc_map(inst.inclusion, b.p, b.q).injective);
    }
  }
}

TEST_CASE("chains of star-closed sub-complexes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CAPTURE(seed);
    auto inst = synthetic::random_subiso_instance(seed);
    REQUIRE(check_map(inst.b_into_a).empty());
    REQUIRE(check_map(inst.c_into_a).empty());
    for (const Bidegree& b : antidiagonal_order(3)) {
      CHECK(induced_bc_map(inst.b_into_a, b.p, b.q).injective);
      CHECK(induced_bc_map(inst.c_into_a, b.p, b.q).injective);
    }
  }
}

TEST_CASE("split modulo delbar") {
  SUBCASE("phi already in the sub-complex") {
    BigradedComplex c = synthetic::random_double_complex(8);
    ComplexMap id = ComplexMap::identity(c);
    for (const Bidegree& b : c.support()) {
      std::mt19937_64 rng(b.p * 7 + b.q);
      Vector phi = testsupport::random_vector(rng, c.dim(b));
      if (!is_zero(c.delbar(b) * phi)) continue;
      auto s = split_modulo_delbar(id, phi, b.p, b.q);
      CHECK(s.phi_tilde + c.delbar({b.p, b.q - 1}) * s.phi_hat == phi);
    }
  }

  SUBCASE("seeded admissible inputs") {
    int done = 0;
    for (std::uint64_t seed = 0; seed < 300 && done < 50; ++seed) {
      CAPTURE(seed);
      auto inst = synthetic::random_transfer_instance(seed);
      const ComplexMap& m = inst.inclusion;
      if (!cols_quasi_iso(m)) continue;
      std::mt19937_64 rng(seed);
      for (const Bidegree& b : inst.ambient.support()) {
        const BigradedComplex& a = inst.ambient;
        const BigradedComplex& c = inst.sub;
        Vector phi = m.block(b) * testsupport::random_vector(rng, c.dim(b));
        phi = phi + a.delbar({b.p, b.q - 1}) * testsupport::random_vector(rng, a.dim({b.p, b.q - 1}));
        Subspace closed = kernel(a.delbar(b));
        if (closed.dim() > 0) phi = phi + closed.basis() * testsupport::random_vector(rng, closed.dim());
        auto s = split_modulo_delbar(m, phi, b.p, b.q);
        CHECK(m.block(b) * s.phi_tilde + a.delbar({b.p, b.q - 1}) * s.phi_hat == phi);
        ++done;
        break;
      }
    }
    CHECK(done == 50);
  }

  SUBCASE("delbar(phi) outside the sub-complex is rejected") {
    BigradedComplex a;
    a.add_space({0, 0}, {"x"});
    a.add_space({0, 1}, {"y"});
    a.set_delbar({0, 0}, Matrix{{1}});
    BigradedComplex c;
    ComplexMap m = ComplexMap::zero(c, a);
    ComplexMap incl(c, a, {}, true);
    CHECK_THROWS_AS(split_modulo_delbar(incl, Vector{Scalar(1)}, 0, 0), PreconditionError);
    CHECK_THROWS_AS(split_modulo_delbar(m, Vector{Scalar(1)}, 0, 0), PreconditionError);
  }
}
