#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcoh/catalog.hpp"
#include "tcoh/errors.hpp"
#include "tcoh/homology.hpp"
#include "tcoh/tensor.hpp"

using namespace tcoh;

namespace {

std::vector<size_t> dims(const Resolution& r) {
  std::vector<size_t> d;
  for (const auto& t : r.terms) d.push_back(t.dim());
  return d;
}

// d o d = 0, exactness of the augmented complex, minimality.
void check_resolution(const RightModule& m, const Resolution& r) {
  const Field& F = m.field();
  CHECK(rank(F, r.augmentation) == m.dim());
  Subspace prev_ker = left_kernel(F, r.augmentation);
  for (size_t i = 0; i < r.differentials.size(); ++i) {
    const Matrix& d = r.differentials[i];
    const Matrix& below = i == 0 ? r.augmentation : r.differentials[i - 1];
    CHECK(multiply(F, d, below).is_zero());
    CHECK(Subspace::row_space(F, d) == prev_ker);
    Subspace rad = radical_submodule(r.terms[i].module());
    CHECK(Subspace::row_space(F, d).is_subspace_of(rad));
    prev_ker = left_kernel(F, d);
  }
  if (r.complete) CHECK(prev_ker.dim() == 0);
}

}  // namespace

TEST_CASE("minimal resolution examples") {
  Field Q = Field::rationals();
  auto a2 = linear_quiver(Q, 2);
  Resolution p = minimal_resolution(regular_module(a2), 3);
  CHECK(p.complete);
  CHECK(p.length() == 0);

  RightModule s1 = simple_module(a2, 0);
  Resolution r = minimal_resolution(s1, 3);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].module().dimension_vector() == std::vector<size_t>{1, 1});
  CHECK(r.terms[1].module().dimension_vector() == std::vector<size_t>{0, 1});
  check_resolution(s1, r);

  auto d = dual_numbers(Q);
  RightModule k = simple_module(d, 0);
  Resolution per = minimal_resolution(k, 4);
  CHECK_FALSE(per.complete);
  CHECK(dims(per) == std::vector<size_t>{2, 2, 2, 2, 2});
  for (const auto& el : per.elements) {
    REQUIRE(el.size() == 1);
    CHECK(el[0][0] == unit_vector(2, 1));
  }
  check_resolution(k, per);
}

TEST_CASE("resolutions of random modules are minimal and exact") {
  std::mt19937_64 rng(11);
  Field Q = Field::rationals();
  for (auto alg : {kronecker(Q), dual_numbers(Q), linear_quiver(Q, 3, true), linear_quiver(Q, 3)}) {
    for (int trial = 0; trial < 8; ++trial) {
      RightModule m = random_module(alg, rng, 6);
      m.validate();
      check_resolution(m, minimal_resolution(m, 3));
    }
  }
}

TEST_CASE("Tor examples") {
  Field Q = Field::rationals();
  auto d = dual_numbers(Q);
  RightModule k = simple_module(d, 0);
  Bimodule reg = regular_bimodule(d);
  Bimodule kk = quotient_bimodule(reg, d->radical());
  for (size_t i = 0; i <= 4; ++i) CHECK(tor_dim(k, kk, i) == 1);
  for (size_t i = 1; i <= 3; ++i) CHECK(tor_dim(regular_module(d), kk, i) == 0);
  Resolution short_res = minimal_resolution(k, 2);
  CHECK_THROWS_AS(tor_dim_from_resolution(short_res, kk.left_actions(), 3), UndeterminedError);
}

TEST_CASE("Tor_0 agrees with the tensor product and Tor balances") {
  std::mt19937_64 rng(23);
  Field Q = Field::rationals();
  for (auto alg : {kronecker(Q), dual_numbers(Q), linear_quiver(Q, 3, true)}) {
    Bimodule reg = regular_bimodule(alg);
    Bimodule top = quotient_bimodule(reg, alg->radical());
    Bimodule dual = dual_bimodule(alg);
    for (int trial = 0; trial < 4; ++trial) {
      RightModule m = random_module(alg, rng, 5);
      for (const Bimodule* s : {&reg, &top, &dual}) {
        CHECK(tor_dim(m, *s, 0) == oracle::tensor_dim(m, *s));
        CHECK(tor(m, *s, 0).dim() == TensorProduct(m, *s).dim());
        for (size_t i = 0; i <= 2; ++i) CHECK(tor_dim(m, *s, i) == tor_dim_mirrored(m, *s, i));
      }
    }
  }
}

TEST_CASE("Ext bimodule examples") {
  Field Q = Field::rationals();
  auto k = kronecker(Q);
  Bimodule reg = regular_bimodule(k);
  Bimodule e0 = ext_bimodule(reg, reg, 0);
  e0.validate();
  CHECK(e0.dim() == 4);

  Bimodule theta = ext_bimodule(dual_bimodule(k), reg, 1);
  theta.validate();
  CHECK(theta.dim() == 12);
  CHECK(ext_dim(dual_bimodule(k), reg, 0) == 0);

  auto ss = semisimple_algebra(Q, 2);
  Bimodule sreg = regular_bimodule(ss);
  CHECK(ext_bimodule(dual_bimodule(ss), sreg, 1).dim() == 0);
  CHECK(ext_bimodule(dual_bimodule(ss), sreg, 0).dim() == 2);
}

TEST_CASE("Ext via the resolution matches Hom counts for i = 0") {
  std::mt19937_64 rng(29);
  Field Q = Field::rationals();
  for (auto alg : {kronecker(Q), linear_quiver(Q, 3, true)}) {
    for (int trial = 0; trial < 6; ++trial) {
      RightModule x = random_module(alg, rng, 5);
      RightModule y = random_module(alg, rng, 5);
      CHECK(ext_dim(x, y, 0) == oracle::hom_dim(x, y));
    }
  }
}

TEST_CASE("induced Ext action does not depend on the chain lift") {
  std::mt19937_64 rng(31);
  Field Q = Field::rationals();
  for (auto alg : {kronecker(Q), linear_quiver(Q, 3, true)}) {
    Bimodule reg = regular_bimodule(alg);
    Bimodule d = dual_bimodule(alg);
    for (size_t i = 0; i <= 2; ++i) {
      Bimodule a = ext_bimodule(d, reg, i);
      Bimodule b = ext_bimodule(d, reg, i, {&rng});
      CHECK(a.actions() == b.actions());
      CHECK(a.left_actions() == b.left_actions());
      b.validate();
    }
  }
}
