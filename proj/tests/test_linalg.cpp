#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcoh/linalg.hpp"

using namespace tcoh;

namespace {

Matrix mat(const Field& F, std::vector<std::vector<int>> rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

Vector vec(const Field& F, std::vector<int> v) {
  Vector r;
  for (int x : v) r.push_back(F.from_int(x));
  return r;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact past 64 bits") {
  Rational a(int64_t{1} << 62, 3);
  Rational b = a * a * a;
  Rational c = b / a / a;
  CHECK(c == a);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("prime field reduces eagerly") {
  Field F = Field::prime(7);
  CHECK(F.from_int(-1) == Rational(6));
  CHECK(F.mul(F.from_int(3), F.inv(F.from_int(3))) == Rational(1));
  CHECK_THROWS(Field::prime(9));
}

TEST_CASE("kernel_basis examples") {
  Field Q = Field::rationals();
  Subspace k = kernel_basis(Q, mat(Q, {{1, 1}, {1, 1}}));
  REQUIRE(k.dim() == 1);
  CHECK(k.basis_vector(0) == vec(Q, {1, -1}));
  CHECK(kernel_basis(Q, Matrix::identity(Q, 3)).dim() == 0);
  Field F2 = Field::prime(2);
  Subspace k2 = kernel_basis(F2, mat(F2, {{1, 1}}));
  REQUIRE(k2.dim() == 1);
  CHECK(k2.basis_vector(0) == vec(F2, {1, 1}));
}

TEST_CASE("quotient_coords examples") {
  Field Q = Field::rationals();
  Subspace s = Subspace::span(Q, 2, {vec(Q, {1, 0})});
  CHECK(s.quotient_coords(vec(Q, {3, 5})) == vec(Q, {5}));
  CHECK(Subspace::full(Q, 2).quotient_coords(vec(Q, {3, 5})).empty());
  Subspace d = Subspace::span(Q, 2, {vec(Q, {1, 1})});
  CHECK(d.quotient_coords(vec(Q, {1, 0})) == vec(Q, {-1}));
  CHECK_THROWS(d.quotient_coords(vec(Q, {1})));
}

TEST_CASE("rank-nullity, canonical kernels and exact membership on random matrices") {
  std::mt19937_64 rng(17);
  for (const Field& F : {Field::rationals(), Field::prime(5)}) {
    for (int trial = 0; trial < 60; ++trial) {
      size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix m(r, c);
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = F.from_int(static_cast<int64_t>(rng() % 5) - 2);
      Subspace k = kernel_basis(F, m);
      CHECK(rank(F, m) + k.dim() == c);
      CHECK(rank(F, m) == oracle::dense_rank(F, m));
      CHECK(Subspace::row_space(F, k.basis()) == k);
      for (size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(vec_mat(F, k.basis_vector(i), m.transpose())));
      Subspace rs = Subspace::row_space(F, m);
      Vector v(c);
      for (auto& x : v) x = F.from_int(static_cast<int64_t>(rng() % 3) - 1);
      CHECK(is_zero(rs.quotient_coords(v)) == rs.contains(v));
      CHECK(is_zero(rs.quotient_coords(m.row(0))));
    }
  }
}

TEST_CASE("left solver returns a solution whenever one exists") {
  std::mt19937_64 rng(3);
  Field Q = Field::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = Q.from_int(static_cast<int64_t>(rng() % 5) - 2);
    Vector x(r);
    for (auto& e : x) e = Q.from_int(static_cast<int64_t>(rng() % 5) - 2);
    Vector b = vec_mat(Q, x, m);
    LeftSolver s(Q, m);
    auto z = s.solve(b);
    REQUIRE(z);
    CHECK(vec_mat(Q, *z, m) == b);
  }
}
