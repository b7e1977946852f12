#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tcoh/algebra.hpp"
#include "tcoh/linalg.hpp"

namespace tcoh {

// Finite-dimensional right module. Vectors are rows and action matrices act
// on the right, so action(b_i b_j) = action(b_i) * action(b_j).
class RightModule {
 public:
  RightModule() = default;
  RightModule(AlgebraPtr alg, size_t dim, std::vector<Matrix> action);

  static RightModule zero(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  size_t dim() const { return dim_; }

  const Matrix& action(size_t basis_index) const { return action_[basis_index]; }
  const std::vector<Matrix>& actions() const { return action_; }
  Matrix action_of(const Vector& a) const;
  // x * a
  Vector act(const Vector& x, const Vector& a) const;

  // M e_v
  const Subspace& vertex_space(size_t v) const { return vertex_spaces_[v]; }
  std::vector<size_t> dimension_vector() const;

  // Throws InputError naming the first failing axiom.
  void validate() const;

 protected:
  AlgebraPtr alg_;
  size_t dim_ = 0;
  std::vector<Matrix> action_;
  std::vector<Subspace> vertex_spaces_;
};

// Bimodule: a right module plus a commuting left action. Left action
// matrices act on row vectors, a.x = x * left(a), so left(ab) = left(b) left(a).
class Bimodule : public RightModule {
 public:
  Bimodule() = default;
  Bimodule(AlgebraPtr alg, size_t dim, std::vector<Matrix> right, std::vector<Matrix> left);

  const Matrix& left_action(size_t basis_index) const { return left_[basis_index]; }
  const std::vector<Matrix>& left_actions() const { return left_; }
  Matrix left_action_of(const Vector& a) const;
  // a . x
  Vector left_act(const Vector& a, const Vector& x) const;

  // e_v M
  const Subspace& left_vertex_space(size_t v) const { return left_vertex_spaces_[v]; }

  const RightModule& right() const { return *this; }
  void validate() const;

 private:
  std::vector<Matrix> left_;
  std::vector<Subspace> left_vertex_spaces_;
};

// A right-module homomorphism v -> v * matrix.
struct ModuleMap {
  Matrix matrix;
};

bool intertwines(const RightModule& src, const RightModule& tgt, const Matrix& f);
bool is_isomorphism(const Field& F, const Matrix& f);

Bimodule regular_bimodule(AlgebraPtr alg);
RightModule regular_module(AlgebraPtr alg);
// k-dual with (f.a)(x) = f(a x) and (a.f)(x) = f(x a).
Bimodule dual_bimodule(AlgebraPtr alg);
// e_v A / e_v rad
RightModule simple_module(AlgebraPtr alg, size_t v);

// Submodule on the RREF basis of an invariant subspace.
RightModule submodule(const RightModule& m, const Subspace& sub);
// Quotient on the non-pivot coordinates of sub.
RightModule quotient_module(const RightModule& m, const Subspace& sub);
Bimodule quotient_bimodule(const Bimodule& m, const Subspace& sub);
// Smallest submodule containing the given vectors.
Subspace generated_submodule(const RightModule& m, const std::vector<Vector>& gens);
RightModule direct_sum(const std::vector<RightModule>& parts);

// Restriction of a right-acting matrix to an invariant subspace, in the RREF
// coordinates of that subspace.
Matrix restrict_to(const Subspace& sub, const Matrix& act);
// Induced action on the quotient by an invariant subspace.
Matrix induce_on_quotient(const Subspace& sub, const Matrix& act);

// Random finitely presented module: a quotient of a sum of one or two
// indecomposable projectives by the submodule generated by random elements.
RightModule random_module(AlgebraPtr alg, std::mt19937_64& rng, size_t max_dim);

// Portable helpers over mt19937_64 so seeded runs agree across platforms.
uint64_t rand_below(std::mt19937_64& rng, uint64_t n);
Rational random_scalar(const Field& F, std::mt19937_64& rng, int64_t spread = 2);

}  // namespace tcoh
