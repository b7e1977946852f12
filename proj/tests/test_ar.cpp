#include "doctest.h"
#include "oracles.hpp"
#include "tcoh/ar.hpp"
#include "tcoh/catalog.hpp"

using namespace tcoh;

namespace {

size_t split_dim(const Bimodule& b, const Vector& e, bool left) {
  const Field& F = b.field();
  Matrix m = left ? b.left_action_of(e) : b.action_of(e);
  return oracle::dense_rank(F, m);
}

}  // namespace

TEST_CASE("inverse dualizing bimodule") {
  Field Q = Field::rationals();

  SUBCASE("semisimple algebra") {
    ThetaData th = build_theta(semisimple_algebra(Q, 2), 0, 2);
    CHECK(th.gldim == 0);
    CHECK(th.theta.dim() == 2);
  }

  SUBCASE("Kronecker algebra") {
    auto alg = kronecker(Q);
    ThetaData th = build_theta(alg, 1, 2);
    CHECK(th.gldim == 1);
    CHECK(th.theta.dim() == 12);
    // theta e_1 = Ext^1(I_1, A) and theta e_2 = Ext^1(I_2, A)
    CHECK(split_dim(th.theta, alg->idempotent(0), false) == 5);
    CHECK(split_dim(th.theta, alg->idempotent(1), false) == 7);
    CHECK(split_dim(th.theta, alg->idempotent(0), true) == 7);
    CHECK(split_dim(th.theta, alg->idempotent(1), true) == 5);
    CHECK_THROWS_AS(build_theta(alg, 0, 2), HypothesisError);
  }

  SUBCASE("over F_3") {
    ThetaData th = build_theta(kronecker(Field::prime(3)), 1, 2);
    CHECK(th.theta.dim() == 12);
  }
}

TEST_CASE("preprojective truncations") {
  Field Q = Field::rationals();
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  CHECK(preprojective_truncation(th, 3, 2).dims == std::vector<size_t>{4, 12, 20, 28});
  CHECK(preprojective_truncation(th, 0, 2).dims == std::vector<size_t>{4});
  ThetaData ss = build_theta(semisimple_algebra(Q, 2), 0, 2);
  CHECK(preprojective_truncation(ss, 2, 2).dims == std::vector<size_t>{2, 2, 2});
}

TEST_CASE("tau pair") {
  Field Q = Field::rationals();
  auto alg = kronecker(Q);
  ThetaData th = build_theta(alg, 1, 2);

  TauPair reg = tau_pair(th, regular_module(alg));
  CHECK(reg.tau.dim() == 12);
  CHECK(reg.tau_minus.dim() == 0);
  CHECK(oracle::dense_rank(Q, reg.unit) == 4);

  // the simple projective sits at the sink
  TauPair p2 = tau_pair(th, ProjectiveModule(alg, {1}).module());
  CHECK(p2.tau.dim() == 5);
  TauPair p1 = tau_pair(th, ProjectiveModule(alg, {0}).module());
  CHECK(p1.tau.dim() == 7);

  TauPair zero = tau_pair(th, RightModule::zero(alg));
  CHECK(zero.tau.dim() == 0);
  CHECK(zero.tau_minus.dim() == 0);
}

TEST_CASE("eta ladder") {
  Field Q = Field::rationals();

  SUBCASE("zero module") {
    ThetaData th = build_theta(kronecker(Q), 1, 2);
    TensorTower t(th.theta, 2);
    EtaReport r = eta_stabilization(t, RightModule::zero(th.algebra), 2);
    CHECK(r.ladder == std::vector<size_t>{0, 0, 0});
    CHECK(r.s0 == std::optional<size_t>(0));
  }

  SUBCASE("Kronecker regular module") {
    ThetaData th = build_theta(kronecker(Q), 1, 2);
    TensorTower t(th.theta, 4);
    EtaReport r = eta_stabilization(t, regular_module(th.algebra), 4);
    REQUIRE(r.s0);
    CHECK(*r.s0 <= 4);
    CHECK(r.module_dims == std::vector<size_t>{4, 12, 20, 28, 36});
  }

  SUBCASE("flat theta") {
    ThetaData th = build_theta(semisimple_algebra(Q, 2), 0, 2);
    TensorTower t(th.theta, 3);
    EtaReport r = eta_stabilization(t, simple_module(th.algebra, 0), 3);
    CHECK(r.s0 == std::optional<size_t>(0));
  }

  SUBCASE("cap below s_max") {
    ThetaData th = build_theta(kronecker(Q), 1, 2);
    TensorTower t(th.theta, 1);
    CHECK_THROWS_AS(eta_stabilization(t, regular_module(th.algebra), 2), InputError);
  }
}
