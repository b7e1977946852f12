#include <memory>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcoh/ar.hpp"
#include "tcoh/catalog.hpp"
#include "tcoh/graded.hpp"
#include "word_model.hpp"

using namespace tcoh;

namespace {

std::shared_ptr<const TensorTower> make_tower(const Bimodule& s, size_t cap) {
  return std::make_shared<const TensorTower>(s, cap);
}

Vector random_vector(const Field& F, std::mt19937_64& rng, size_t n) {
  Vector v(n);
  for (auto& x : v) x = random_scalar(F, rng, 3);
  return v;
}

}  // namespace

TEST_CASE("tower dimensions") {
  Field Q = Field::rationals();
  auto k = field_algebra(Q);
  TensorTower t2(make_free_instance(k, 2), 3);
  CHECK(t2.dims() == std::vector<size_t>{1, 2, 4, 8});

  auto dn = dual_numbers(Q);
  TensorTower td(regular_bimodule(dn), 4);
  CHECK(td.dims() == std::vector<size_t>{2, 2, 2, 2, 2});

  ThetaData th = build_theta(kronecker(Q), 1, 2);
  TensorTower tk(th.theta, 2);
  CHECK(tk.dims() == std::vector<size_t>{4, 12, 20});

  TensorTower same = tower_extend(tk, 2);
  CHECK(same.dims() == tk.dims());
  TensorTower longer = tower_extend(tk, 3);
  CHECK(longer.dims() == std::vector<size_t>{4, 12, 20, 28});
  CHECK(longer.ledger().size() >= tk.ledger().size());
}

TEST_CASE("tower matches the word model") {
  for (Field F : {Field::rationals(), Field::prime(3)}) {
    for (auto alg : {dual_numbers(F), kronecker(F), linear_quiver(F, 2)}) {
      oracle::WordModel wf(alg, oracle::WordModel::Kind::Free, 2);
      TensorTower tf(make_free_instance(alg, 2), 3);
      oracle::WordModel wb(alg, oracle::WordModel::Kind::Bar);
      TensorTower tb(make_bar_instance(alg), 2);
      for (size_t s = 0; s <= 3; ++s) CHECK(tf.power(s).dim() == wf.dim(s));
      for (size_t s = 0; s <= 2; ++s) CHECK(tb.power(s).dim() == wb.dim(s));
      // the word basis maps onto a basis of each power
      for (size_t s = 0; s <= 2; ++s) {
        std::vector<Vector> rows;
        for (size_t i = 0; i < wb.dim(s); ++i) rows.push_back(wb.to_tower(tb, s, i));
        CHECK(oracle::rank_rows(F, rows, tb.power(s).dim()) == wb.dim(s));
      }
    }
  }
}

TEST_CASE("tower multiplication is associative and unital") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(7);
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  std::vector<TensorTower> towers;
  towers.emplace_back(th.theta, 3);
  towers.emplace_back(make_bar_instance(dual_numbers(Q)), 3);
  towers.emplace_back(regular_bimodule(linear_quiver(Q, 3, true)), 3);
  for (const auto& t : towers) {
    const Vector& one = t.algebra()->unit();
    for (size_t a = 0; a <= 3; ++a) {
      Vector x = random_vector(Q, rng, t.power(a).dim());
      CHECK(t.mult(0, one, a, x) == x);
      CHECK(t.mult(a, x, 0, one) == x);
    }
    for (int trial = 0; trial < 6; ++trial) {
      size_t a = rand_below(rng, 2), b = rand_below(rng, 2), c = rand_below(rng, 3 - a - b + 1);
      if (a + b + c > 3) continue;
      Vector x = random_vector(Q, rng, t.power(a).dim());
      Vector y = random_vector(Q, rng, t.power(b).dim());
      Vector z = random_vector(Q, rng, t.power(c).dim());
      CHECK(t.mult(a + b, t.mult(a, x, b, y), c, z) == t.mult(a, x, b + c, t.mult(b, y, c, z)));
    }
  }
}

TEST_CASE("graded kernel examples") {
  Field Q = Field::rationals();
  auto k = field_algebra(Q);
  Vector one{Rational(1)};

  SUBCASE("multiplication by X on k[X]") {
    auto t = make_tower(make_free_instance(k, 1), 4);
    GradedMap f{GradedProjective::free(t, {1}), GradedProjective::free(t, {0}), {{0, 0, one}}};
    GradedKernel g = graded_kernel(f, 4);
    for (const auto& d : g.degrees) CHECK(d.dim_k == 0);
    CHECK(g.generator_degrees.empty());
    CHECK(g.stabilization == std::optional<size_t>(0));
    CHECK(g.degrees[0].dim_c == 1);
    for (size_t s = 1; s <= 4; ++s) CHECK(g.degrees[s].dim_c == 0);
  }

  SUBCASE("the pair X, Y on k<X,Y>") {
    auto t = make_tower(make_free_instance(k, 2), 4);
    GradedMap f{GradedProjective::free(t, {1, 1}), GradedProjective::free(t, {0}),
                {{0, 0, Vector{Rational(1), Rational(0)}}, {0, 1, Vector{Rational(0), Rational(1)}}}};
    GradedKernel g = graded_kernel(f, 4);
    for (const auto& d : g.degrees) CHECK(d.dim_k == 0);
    CHECK(g.stabilization == std::optional<size_t>(0));
  }

  SUBCASE("multiplication by x on A[X] over the dual numbers") {
    auto dn = dual_numbers(Q);
    auto t = make_tower(make_free_instance(dn, 1), 4);
    Vector x{Rational(0), Rational(1)};
    GradedMap f{GradedProjective::free(t, {0}), GradedProjective::free(t, {0}), {{0, 0, x}}};
    GradedKernel g = graded_kernel(f, 4);
    for (const auto& d : g.degrees) CHECK(d.dim_k == 1);
    CHECK(g.generator_degrees == std::vector<size_t>{0});
    CHECK(g.stabilization == std::optional<size_t>(0));
  }
}

TEST_CASE("graded kernel dimensions against the word model") {
  for (Field F : {Field::rationals(), Field::prime(5)}) {
    std::mt19937_64 rng(F.is_prime() ? 11 : 13);
    for (auto alg : {dual_numbers(F), kronecker(F)}) {
      for (auto kind : {oracle::WordModel::Kind::Free, oracle::WordModel::Kind::Bar}) {
        size_t D = kind == oracle::WordModel::Kind::Free ? 3 : 2;
        oracle::WordModel w(alg, kind, 2);
        Bimodule s = kind == oracle::WordModel::Kind::Free ? make_free_instance(alg, 2) : make_bar_instance(alg);
        auto t = make_tower(s, D);
        for (int trial = 0; trial < 3; ++trial) {
          oracle::WordMap wm = oracle::random_word_map(w, rng, 1, 2, D);
          GradedKernel g = graded_kernel(oracle::to_library_map(w, t, wm), D);
          for (size_t deg = 0; deg <= D; ++deg) CHECK(g.degrees[deg].dim_k == oracle::word_kernel_dim(F, w, wm, deg));
        }
      }
    }
  }
}

TEST_CASE("graded kernel exact sequences") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(17);
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  auto t = make_tower(th.theta, 3);
  for (int trial = 0; trial < 3; ++trial) {
    GradedMap f = random_graded_map(t, rng, 1);
    GradedKernel g = graded_kernel(f, 3);
    for (const auto& d : g.degrees) {
      CHECK(d.dim_k + d.dim_i == d.dim_p);
      CHECK(d.dim_i + d.dim_c == d.dim_q);
    }
    for (size_t s = 0; s <= 3; ++s) {
      Matrix fs = f.slice(s);
      for (size_t c = 0; c < g.kernel_spaces[s].dim(); ++c)
        CHECK(is_zero(vec_mat(Q, g.kernel_spaces[s].basis_vector(c), fs)));
      // the degree-s parts are A-submodules
      g.kernel.parts[s].validate();
      g.cokernel.parts[s].validate();
    }
    // steps of K, I, C commute with those of P and Q
    for (size_t s = 0; s < 3; ++s)
      for (size_t d = 0; d < t->sigma().dim(); ++d) {
        const Matrix& ps = f.source.module().steps[s][d];
        for (size_t c = 0; c < g.kernel_spaces[s].dim(); ++c) {
          Vector a = vec_mat(Q, g.kernel_spaces[s].basis_vector(c), ps);
          Vector b = vec_mat(Q, g.kernel.steps[s][d].row(c), [&] {
            Matrix e(g.kernel_spaces[s + 1].dim(), f.source.dim(s + 1));
            for (size_t r = 0; r < e.rows(); ++r) e.set_row(r, g.kernel_spaces[s + 1].basis_vector(r));
            return e;
          }());
          CHECK(a == b);
        }
      }
  }
}

TEST_CASE("compatibility of mu with a graded map") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(19);
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  auto t = make_tower(th.theta, 3);
  for (int trial = 0; trial < 3; ++trial) {
    GradedMap f = random_graded_map(t, rng, 1);
    for (size_t m = f.source.min_degree(); m <= 2; ++m) {
      if (f.source.dim(m) == 0) continue;
      Vector x = random_vector(Q, rng, f.source.dim(m));
      Matrix fm = f.slice(m);
      for (size_t n = 0; m + n <= 3; ++n) {
        Matrix lhs = multiply(Q, mu_table(f.source.module(), m, x, n), f.slice(m + n));
        Matrix rhs = mu_table(f.target.module(), m, vec_mat(Q, x, fm), n);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("mu maps") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(23);
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  auto t = make_tower(th.theta, 3);
  GradedProjective p = GradedProjective::free(t, {0, 1});
  const GradedModule& g = p.module();

  SUBCASE("n = 0 is the identity") {
    for (size_t m = 0; m <= 3; ++m) {
      Matrix mu = mu_map(g, m, 0);
      CHECK(mu.rows() == g.parts[m].dim());
      CHECK(oracle::dense_rank(Q, mu) == g.parts[m].dim());
    }
  }

  SUBCASE("free modules are generated in their generator degrees") {
    for (size_t s = 1; s < 3; ++s) CHECK(mu_is_iso(g, s));
    CHECK_FALSE(mu_is_iso(g, 0));
  }

  SUBCASE("composition through the tower product") {
    for (int trial = 0; trial < 4; ++trial) {
      size_t m = rand_below(rng, 2), n1 = 1, n2 = rand_below(rng, 3 - m - n1 + 1);
      Vector x = random_vector(Q, rng, g.parts[m].dim());
      Vector w1 = random_vector(Q, rng, t->power(n1).dim());
      Vector w2 = random_vector(Q, rng, t->power(n2).dim());
      Vector direct = vec_mat(Q, t->mult(n1, w1, n2, w2), mu_table(g, m, x, n1 + n2));
      Vector x1 = vec_mat(Q, w1, mu_table(g, m, x, n1));
      Vector staged = vec_mat(Q, w2, mu_table(g, m + n1, x1, n2));
      CHECK(direct == staged);
    }
  }
}

TEST_CASE("the kernel of a map from a free module over the dual numbers") {
  Field Q = Field::rationals();
  auto dn = dual_numbers(Q);
  auto t = make_tower(regular_bimodule(dn), 3);
  Vector x{Rational(0), Rational(1)};
  GradedMap f{GradedProjective::free(t, {0}), GradedProjective::free(t, {0}), {{0, 0, x}}};
  GradedKernel g = graded_kernel(f, 3);
  for (const auto& d : g.degrees) CHECK(d.dim_k == 1);
  CHECK(g.stabilization == std::optional<size_t>(0));
}

TEST_CASE("coherence on free and bar instances") {
  for (Field F : {Field::rationals(), Field::prime(2)}) {
    std::mt19937_64 rng(29);
    for (auto alg : {dual_numbers(F), kronecker(F)}) {
      for (const Bimodule& s : {make_free_instance(alg, 2), make_bar_instance(alg)}) {
        auto t = make_tower(s, 2);
        std::vector<GradedMap> maps{random_graded_map(t, rng, 1), random_graded_map(t, rng, 1)};
        CoherenceCertificate c = coherence_check(t, maps, 2, 2);
        CHECK(c.flat);
        CHECK(c.verdict == Verdict::CertifiedFlatPath);
        for (const auto& row : c.flat_tor_dims)
          for (size_t d : row) CHECK(d == 0);
      }
    }
  }
}

TEST_CASE("coherence for the Kronecker preprojective tower") {
  Field Q = Field::rationals();
  std::mt19937_64 rng(31);
  ThetaData th = build_theta(kronecker(Q), 1, 2);
  auto t = make_tower(th.theta, 4);
  std::vector<GradedMap> maps{random_graded_map(t, rng, 1), random_graded_map(t, rng, 1)};
  CoherenceCertificate c = coherence_check(t, maps, 4, 2);
  CHECK_FALSE(c.flat);
  CHECK(c.verdict == Verdict::BoundedEvidence);
  REQUIRE(c.purity);
  CHECK(c.purity->pure);
  CHECK(verdict_name(c.verdict) == "bounded-evidence");
  for (const auto& mc : c.maps) CHECK(mc.q == std::max(mc.p, mc.q));
}

TEST_CASE("graded resolutions") {
  Field Q = Field::rationals();

  SUBCASE("the regular module is free") {
    auto t = make_tower(make_free_instance(dual_numbers(Q), 1), 3);
    GradedResolution r = graded_resolution(tensor_with_tower(regular_module(t->algebra()), t), 3);
    CHECK(r.terminated);
    CHECK(r.length() == 0);
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].summands.size() == 2 * 0 + t->algebra()->num_vertices());
  }

  SUBCASE("a simple over the Kronecker preprojective tower") {
    ThetaData th = build_theta(kronecker(Q), 1, 2);
    auto t = make_tower(th.theta, 5);
    for (size_t v = 0; v < 2; ++v) {
      GradedResolution r = graded_resolution(graded_simple(t, v), 4);
      CHECK(r.terminated);
      CHECK(r.length() <= 2);
    }
    GradedResolution r = graded_resolution(graded_simple(t, 1), 4);
    CHECK(r.length() == 2);
  }

  SUBCASE("the residue field of the dual numbers does not terminate") {
    auto t = make_tower(regular_bimodule(dual_numbers(Q)), 3);
    GradedResolution r = graded_resolution(graded_simple(t, 0), 3);
    CHECK_FALSE(r.terminated);
  }
}
