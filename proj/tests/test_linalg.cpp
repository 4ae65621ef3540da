#include <doctest.h>

#include "bcforge/linalg.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace bcforge;

TEST_CASE("scalar parsing and arithmetic") {
  CHECK(Scalar::parse("3/6") == Scalar(mpq_class(1, 2)));
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("1/2-3/4i") == Scalar(mpq_class(1, 2), mpq_class(-3, 4)));
  CHECK(Scalar::parse("2+i").to_string() == "2+i");
  CHECK((Scalar::i() * Scalar::i()) == Scalar(-1));
  Scalar z = Scalar::parse("3-4i");
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z.norm() == 25);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
}

TEST_CASE("matrix shapes and bounds") {
  Matrix e(0, 3);
  CHECK(e.rows() == 0);
  CHECK(rank(e) == 0);
  CHECK(kernel(e).dim() == 3);
  CHECK(column_space(e).dim() == 0);
  Matrix f(3, 0);
  CHECK(kernel(f).dim() == 0);
  CHECK(column_space(f).ambient_dim() == 3);
  CHECK((Matrix(2, 0) * Matrix(0, 4)) == Matrix(2, 4));
  Matrix m = Matrix::identity(2);
  CHECK_THROWS_AS(m(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m * Matrix(3, 1), DimensionError);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(3)) == 3);
  CHECK(rank(Matrix(2, 2)) == 0);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix m = seed % 2 ? testsupport::random_matrix(rng, 6, 4)
                        : testsupport::random_low_rank(rng, 6, 4, 1 + seed % 4);
    CHECK(rank(m) == oracle::bareiss_rank(m));
    CHECK(rank(m) == rank(conjugate_transpose(m)));
  }
}

TEST_CASE("rank of the seeded 6x4 matrix matches the fraction-free oracle") {
  std::mt19937_64 rng(20240601);
  Matrix m = testsupport::random_matrix(rng, 6, 4, -2, 2, false);
  std::size_t expected = oracle::bareiss_rank(m);
  CHECK(expected == 4);
  CHECK(rank(m) == expected);
}

TEST_CASE("kernel") {
  CHECK(kernel(Matrix::identity(4)).dim() == 0);
  Subspace k = kernel(Matrix{{1, 1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.vector(0) == Vector{1, -1});
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix m = testsupport::random_low_rank(rng, 5, 7, 1 + seed % 5);
    Subspace ks = kernel(m);
    CHECK(ks.dim() == m.cols() - oracle::bareiss_rank(m));
    CHECK((m * ks.basis()).is_zero());
  }
}

TEST_CASE("column space") {
  CHECK(column_space(Matrix(3, 3)).dim() == 0);
  CHECK(column_space(Matrix::identity(3)) == Subspace::full(3));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix m = testsupport::random_low_rank(rng, 6, 5, 1 + seed % 5);
    Subspace s = column_space(m);
    CHECK(s.dim() == rank(m));
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(is_member(m.column(c), s));
  }
}

TEST_CASE("canonical form is independent of the spanning set") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix gens = testsupport::random_low_rank(rng, 6, 4, 1 + seed % 4);
    Matrix mixed = gens * testsupport::random_invertible(rng, 4);
    CHECK(column_space(gens) == column_space(mixed));
    Matrix extended = Matrix::hstack(mixed, gens * testsupport::random_matrix(rng, 4, 2));
    CHECK(column_space(extended) == column_space(gens));
  }
}

TEST_CASE("sum and intersection") {
  Subspace e1 = Subspace::span(2, {{1, 0}});
  Subspace e2 = Subspace::span(2, {{0, 1}});
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_sum(e1, e1) == e1);
  Subspace plane = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
  Subspace diag = Subspace::span(3, {{1, 1, 0}});
  CHECK(subspace_intersection(plane, diag) == diag);
  CHECK(subspace_intersection(plane, plane) == plane);
  CHECK_THROWS_AS(subspace_sum(e1, plane), DimensionError);
  CHECK_THROWS_AS(subspace_intersection(e1, plane), DimensionError);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    Subspace a = column_space(testsupport::random_low_rank(rng, 7, 4, 1 + seed % 4));
    Subspace b = column_space(testsupport::random_low_rank(rng, 7, 5, 1 + seed % 5));
    Subspace s = subspace_sum(a, b);
    Subspace i = subspace_intersection(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    for (const auto& v : i.vectors()) {
      CHECK(is_member(v, a));
      CHECK(is_member(v, b));
    }
    CHECK(s.dim() == oracle::bareiss_rank(Matrix::hstack(a.basis(), b.basis())));
  }
}

TEST_CASE("membership") {
  Subspace e2 = Subspace::span(2, {{0, 1}});
  CHECK(is_member(Vector{0, 0}, e2));
  CHECK_FALSE(is_member(Vector{1, 0}, e2));
  CHECK_THROWS_AS(is_member(Vector{1, 0, 0}, e2), DimensionError);
  std::mt19937_64 rng(7);
  Subspace s = column_space(testsupport::random_low_rank(rng, 6, 4, 3));
  for (int t = 0; t < 20; ++t) {
    Vector c = testsupport::random_vector(rng, s.dim());
    Vector v = s.basis() * c;
    CHECK(is_member(v, s));
    auto coords = s.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK(*coords == c);
  }
}

TEST_CASE("solve") {
  Vector b{1, Scalar::i(), 3};
  CHECK(solve(Matrix::identity(3), b) == b);
  CHECK_FALSE(solve(Matrix(3, 3), b).has_value());
  CHECK_THROWS_AS(solve(Matrix(2, 2), b), DimensionError);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix m = testsupport::random_low_rank(rng, 6, 5, 1 + seed % 5);
    Vector x0 = testsupport::random_vector(rng, 5);
    auto x = solve(m, m * x0);
    REQUIRE(x.has_value());
    CHECK(m * *x == m * x0);
    Vector y = testsupport::random_vector(rng, 6);
    CHECK(solve(m, y).has_value() == is_member(y, column_space(m)));
  }
}

TEST_CASE("conjugate transpose") {
  Matrix sym{{1, 2}, {2, 5}};
  CHECK(conjugate_transpose(sym) == sym);
  CHECK(conjugate_transpose(Matrix{{Scalar::i()}}) == Matrix{{-Scalar::i()}});
  std::mt19937_64 rng(3);
  Matrix m = testsupport::random_matrix(rng, 3, 5);
  CHECK(conjugate_transpose(conjugate_transpose(m)) == m);
}

TEST_CASE("complement inside a larger subspace") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    std::mt19937_64 rng(seed);
    Matrix big = testsupport::random_low_rank(rng, 7, 5, 4);
    Subspace super = column_space(big);
    Subspace sub = column_space(big * testsupport::random_low_rank(rng, 5, 3, 2));
    Subspace w = complement_in(super, sub);
    CHECK(w.dim() + sub.dim() == super.dim());
    CHECK(subspace_intersection(w, sub).dim() == 0);
    CHECK(subspace_sum(w, sub) == super);
  }
}
