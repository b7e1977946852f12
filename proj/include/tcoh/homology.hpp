#pragma once

#include <optional>
#include <random>
#include <vector>

#include "tcoh/algebra.hpp"
#include "tcoh/module.hpp"

namespace tcoh {

// Direct sum of indecomposable projectives e_v A, one summand per generator.
class ProjectiveModule {
 public:
  ProjectiveModule() = default;
  ProjectiveModule(AlgebraPtr alg, std::vector<size_t> vertices);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<size_t>& vertices() const { return vertices_; }
  size_t generators() const { return vertices_.size(); }
  size_t dim() const { return dim_; }
  size_t offset(size_t gen) const { return offsets_[gen]; }
  size_t block_dim(size_t gen) const { return alg_->projective_space(vertices_[gen]).dim(); }
  const RightModule& module() const { return module_; }

  // Coordinates of g_gen * a for a in e_v A (v the vertex of gen).
  Vector element(size_t gen, const Vector& a) const;
  // The generator g_gen itself.
  Vector generator(size_t gen) const;
  // Component of x on summand gen, as an element of A.
  Vector component(const Vector& x, size_t gen) const;

 private:
  AlgebraPtr alg_;
  std::vector<size_t> vertices_;
  std::vector<size_t> offsets_;
  size_t dim_ = 0;
  RightModule module_;
};

// Minimal generators of a module: a basis of the top M / M rad, lifted to
// M e_v for each vertex v.
struct Cover {
  std::vector<size_t> vertices;
  std::vector<Vector> generators;
};
Cover projective_cover(const RightModule& m);
// Matrix of the map P -> M sending the generators of P to the cover generators.
Matrix cover_map(const ProjectiveModule& p, const std::vector<Vector>& gens, const RightModule& m);
// M rad as a subspace of M.
Subspace radical_submodule(const RightModule& m);

// Minimal projective resolution ... -> P^{-1} -> P^0 -> M.
struct Resolution {
  std::vector<ProjectiveModule> terms;
  Matrix augmentation;                // P^0 -> M
  std::vector<Matrix> differentials;  // differentials[i-1] : P^{-i} -> P^{-(i-1)}
  // elements[i-1][l][j]: component j of d_i(g_l), an element of e_{v_j} A e_{v_l}
  std::vector<std::vector<std::vector<Vector>>> elements;
  bool complete = false;  // the last computed kernel vanished

  size_t computed_terms() const { return terms.size(); }
  // Index of the last nonzero term.
  size_t length() const;
};

Resolution minimal_resolution(const RightModule& m, size_t length_bound);

// Finite presentation P1 -> P0 -> M -> 0 plus a section of P0 -> M on the
// basis of M.
struct Presentation {
  ProjectiveModule top;
  std::vector<Vector> generators;                  // images of the generators of P0
  std::vector<size_t> relation_vertices;
  std::vector<std::vector<Vector>> relations;      // [l][j] in e_{v_j} A e_{w_l}
  std::vector<std::vector<Vector>> section;        // [k][j]: e_k = sum_j gen_j * section[k][j]
};
Presentation present(const RightModule& m);

GlobalDimension global_dimension(AlgebraPtr alg, size_t bound);
size_t projective_dimension_bound(const Resolution& r);

// Homology Z / B of a subquotient of an ambient space.
class Subquotient {
 public:
  Subquotient(Subspace cycles, const Subspace& boundaries);
  size_t dim() const { return free_.size(); }
  const Subspace& cycles() const { return cycles_; }
  // Class of a cycle.
  Vector coords(const Vector& v) const;
  Vector representative(size_t i) const;
  // Induced map of an ambient-to-ambient matrix preserving cycles and boundaries.
  Matrix induced(const Matrix& ambient_map) const;
  // Induced map into another subquotient.
  Matrix induced(const Matrix& ambient_map, const Subquotient& target) const;

 private:
  Subspace cycles_;
  Subspace boundaries_in_cycles_;
  std::vector<size_t> free_;
};

// Tor_i(M, N) with right action inherited from N. Throws UndeterminedError
// when a resolution is cut off before index i+1.
RightModule tor(const RightModule& m, const Bimodule& n, size_t i);
RightModule tor_from_resolution(const Resolution& r, const Bimodule& n, size_t i);
// Tor dimension using only the left action of the second argument.
size_t tor_dim_from_resolution(const Resolution& r, const std::vector<Matrix>& left_action, size_t i);
size_t tor_dim(const RightModule& m, const Bimodule& n, size_t i);
// The same Tor group computed by resolving n over the opposite algebra.
size_t tor_dim_mirrored(const RightModule& m, const Bimodule& n, size_t i);

// Ext^i of the underlying right modules.
size_t ext_dim(const RightModule& x, const RightModule& y, size_t i);
size_t ext_dim_from_resolution(const Resolution& r, const RightModule& y, size_t i);

// Chain endomorphism of a resolution lifting an endomorphism of the resolved
// module. maps[i] acts on P^{-i}.
struct ChainLift {
  std::vector<Matrix> maps;
};
// With a generator, adds random elements of the relevant kernels to each
// step; every choice is a valid lift.
ChainLift lift_chain_map(const Resolution& r, const RightModule& m, const Matrix& endo, size_t upto,
                         std::mt19937_64* perturb = nullptr);

struct ExtBimoduleOptions {
  std::mt19937_64* perturb = nullptr;
};

// Ext^i(x, y) with left action from y and right action induced from the
// left action of x through chain lifts.
Bimodule ext_bimodule(const Bimodule& x, const Bimodule& y, size_t i, ExtBimoduleOptions opts = {});

}  // namespace tcoh
