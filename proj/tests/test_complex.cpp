#include <doctest.h>

#include "bcforge/complex.hpp"
#include "bcforge/synthetic.hpp"
#include "oracle.hpp"

using namespace bcforge;

namespace {

BigradedComplex single_point() {
  BigradedComplex c;
  c.add_space({0, 0}, {"1"});
  return c;
}

// x at (0,0) with del x = a, delbar x = b, del b = w, delbar a = -w.
BigradedComplex square() {
  BigradedComplex c;
  c.add_space({0, 0}, {"x"});
  c.add_space({1, 0}, {"a"});
  c.add_space({0, 1}, {"b"});
  c.add_space({1, 1}, {"w"});
  c.set_del({0, 0}, Matrix{{1}});
  c.set_delbar({0, 0}, Matrix{{1}});
  c.set_del({0, 1}, Matrix{{1}});
  c.set_delbar({1, 0}, Matrix{{-1}});
  return c;
}

std::size_t oracle_quotient(const Matrix& out, const Matrix& in) {
  return oracle::kernel_dim(out) - oracle::bareiss_rank(in);
}

}  // namespace

TEST_CASE("zero complex") {
  BigradedComplex c;
  CHECK(validate(c).empty());
  CHECK(h_delbar(c, 0, 0).dimension == 0);
  CHECK(h_del(c, 1, 2).dimension == 0);
  CHECK(h_deRham(c, 0).dimension == 0);
  CHECK(h_aeppli(c, 0, 0).dimension == 0);
  CHECK(h_pure_type(c, 0, 0) == 0);
  CHECK(frolicher_e1(c, 0, 0) == 0);
  CHECK(satisfies_ddbar_lemma(c));
}

TEST_CASE("single generator") {
  BigradedComplex c = single_point();
  CHECK(validate(c).empty());
  CHECK(h_delbar(c, 0, 0).dimension == 1);
  CHECK(h_bott_chern(c, 0, 0).dimension == 1);
  CHECK(h_aeppli(c, 0, 0).dimension == 1);
  CHECK(h_deRham(c, 0).dimension == 1);
  CHECK(h_pure_type(c, 0, 0) == 1);
  CHECK(satisfies_ddbar_lemma(c));
}

TEST_CASE("square is acyclic for every theory") {
  BigradedComplex c = square();
  REQUIRE(validate(c).empty());
  for (int p = 0; p <= 1; ++p) {
    for (int q = 0; q <= 1; ++q) {
      CHECK(h_del(c, p, q).dimension == 0);
      CHECK(h_delbar(c, p, q).dimension == 0);
      CHECK(h_bott_chern(c, p, q).dimension == 0);
      CHECK(h_aeppli(c, p, q).dimension == 0);
      CHECK(frolicher_e1(c, p, q) == 0);
    }
  }
  for (int k = 0; k <= 2; ++k) CHECK(h_deRham(c, k).dimension == 0);
}

TEST_CASE("validation localizes failed identities") {
  BigradedComplex c = square();
  c.set_delbar({1, 0}, Matrix{{1}});
  auto v = validate(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].identity == "del delbar + delbar del = 0");
  CHECK(v[0].at == Bidegree{0, 0});
  CHECK_THROWS_AS(h_delbar(c, 0, 0), InvalidComplex);
  CHECK_FALSE((c.d_total(1) * c.d_total(0)).is_zero());

  BigradedComplex d;
  d.add_space({0, 0}, {"x"});
  d.add_space({1, 0}, {"y"});
  d.add_space({2, 0}, {"z"});
  d.set_del({0, 0}, Matrix{{1}});
  d.set_del({1, 0}, Matrix{{1}});
  auto w = validate(d);
  REQUIRE(w.size() == 1);
  CHECK(w[0].identity == "del^2 = 0");
  CHECK_THROWS_AS(d.set_del({0, 0}, Matrix(2, 1)), DimensionError);
}

TEST_CASE("conjugation checks") {
  BigradedComplex c;
  c.add_space({1, 0}, {"a"});
  c.add_space({0, 1}, {"b"});
  c.set_conj({1, 0}, Matrix{{Scalar::i()}});
  c.set_conj({0, 1}, Matrix{{Scalar::i()}});
  CHECK(validate(c).empty());
  c.set_conj({0, 1}, Matrix{{2}});
  auto v = validate(c);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].identity == "conj o conj = id");
}

TEST_CASE("antidiagonal order") {
  auto order = antidiagonal_order(3);
  REQUIRE(order.size() == 16);
  CHECK(order[0] == Bidegree{0, 0});
  CHECK(order[1] == Bidegree{1, 0});
  CHECK(order[2] == Bidegree{0, 1});
  CHECK(order[4] == Bidegree{1, 1});
  CHECK(order[15] == Bidegree{3, 3});
}

TEST_CASE("random complexes agree with the rank oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    BigradedComplex c = synthetic::random_double_complex(seed);
    REQUIRE(validate(c).empty());
    auto [lo, hi] = c.degree_range();
    for (int k = lo; k <= hi + 1; ++k) {
      CHECK((c.d_total(k + 1) * c.d_total(k)).is_zero());
      CHECK(h_deRham(c, k).dimension == oracle_quotient(c.d_total(k), c.d_total(k - 1)));
    }
    for (int p = -1; p <= 5; ++p) {
      for (int q = -1; q <= 5; ++q) {
        Bidegree b{p, q};
        CHECK(h_del(c, p, q).dimension == oracle_quotient(c.del(b), c.del({p - 1, q})));
        CHECK(h_delbar(c, p, q).dimension == oracle_quotient(c.delbar(b), c.delbar({p, q - 1})));
        std::size_t bc = oracle::kernel_dim(Matrix::vstack(c.del(b), c.delbar(b))) -
                         oracle::bareiss_rank(c.del_delbar({p - 1, q - 1}));
        CHECK(h_bott_chern(c, p, q).dimension == bc);
        std::size_t ae = oracle::kernel_dim(c.del_delbar(b)) -
                         oracle::bareiss_rank(Matrix::hstack(c.del({p - 1, q}), c.delbar({p, q - 1})));
        CHECK(h_aeppli(c, p, q).dimension == ae);
        CHECK(frolicher_e1(c, p, q) == h_delbar(c, p, q).dimension);
        // dim K - dim(K cap im d) = rank[K | D] - rank D.
        Subspace k = bc_cocycles(c, b);
        if (c.dim(b) > 0) {
          Matrix kt = c.tot_inclusion(b) * k.basis();
          Matrix dprev = c.d_total(p + q - 1);
          std::size_t pure = oracle::bareiss_rank(Matrix::hstack(kt, dprev)) - oracle::bareiss_rank(dprev);
          CHECK(h_pure_type(c, p, q) == pure);
        }
      }
    }
  }
}

TEST_CASE("representatives are cocycles independent modulo coboundaries") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    BigradedComplex c = synthetic::random_double_complex(seed);
    for (const Bidegree& b : c.support()) {
      auto r = h_bott_chern(c, b.p, b.q);
      CHECK(r.representatives.dim() == r.dimension);
      Subspace z = bc_cocycles(c, b);
      Subspace bd = bc_coboundaries(c, b);
      CHECK(is_subspace_of(r.representatives, z));
      CHECK(subspace_intersection(r.representatives, bd).dim() == 0);
      auto a = h_aeppli(c, b.p, b.q);
      CHECK(is_subspace_of(a.representatives, aeppli_cocycles(c, b)));
      CHECK(subspace_intersection(a.representatives, aeppli_coboundaries(c, b)).dim() == 0);
    }
  }
}

TEST_CASE("Frolicher-type inequalities on random complexes") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    BigradedComplex c = synthetic::random_double_complex(seed);
    auto [lo, hi] = c.degree_range();
    for (int k = lo; k <= hi; ++k) {
      std::size_t bca = 0, dd = 0;
      for (const Bidegree& b : c.support()) {
        if (b.total() != k) continue;
        bca += h_bott_chern(c, b.p, b.q).dimension + h_aeppli(c, b.p, b.q).dimension;
        dd += h_del(c, b.p, b.q).dimension + h_delbar(c, b.p, b.q).dimension;
      }
      std::size_t bk = h_deRham(c, k).dimension;
      CHECK(bca >= dd);
      CHECK(dd >= 2 * bk);
    }
    CHECK(ddbar_degrees(c).violations.empty());
  }
}

TEST_CASE("compute_table matches the single queries") {
  BigradedComplex c = synthetic::random_double_complex(11, 3);
  CohomologyTable t = compute_table(c, 3, all_theories(), true, 3);
  for (std::size_t i = 0; i < t.bidegrees.size(); ++i) {
    const Bidegree b = t.bidegrees[i];
    CHECK(t.bigraded[Theory::BottChern][i] == h_bott_chern(c, b.p, b.q).dimension);
    CHECK(t.bigraded[Theory::Pure][i] == h_pure_type(c, b.p, b.q));
  }
  for (int k = 0; k <= 6; ++k) CHECK(t.totals[Theory::DeRham][k] == h_deRham(c, k).dimension);
  REQUIRE(t.ddbar.has_value());
  auto direct = ddbar_degrees(c);
  for (const auto& [k, v] : direct.by_degree) CHECK(t.ddbar->by_degree.at(k) == v);
}
