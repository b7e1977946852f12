#include "tcoh/homology.hpp"

#include <algorithm>

#include "tcoh/errors.hpp"

namespace tcoh {

ProjectiveModule::ProjectiveModule(AlgebraPtr alg, std::vector<size_t> vertices)
    : alg_(std::move(alg)), vertices_(std::move(vertices)) {
  alg_->require_basic();
  RightModule reg = regular_module(alg_);
  std::vector<RightModule> parts;
  for (size_t v : vertices_) {
    offsets_.push_back(dim_);
    dim_ += alg_->projective_space(v).dim();
    parts.push_back(submodule(reg, alg_->projective_space(v)));
  }
  module_ = parts.empty() ? RightModule::zero(alg_) : direct_sum(parts);
}

Vector ProjectiveModule::element(size_t gen, const Vector& a) const {
  const Subspace& s = alg_->projective_space(vertices_[gen]);
  Vector x(dim_);
  Vector c = s.coordinates(a);
  for (size_t t = 0; t < c.size(); ++t) x[offsets_[gen] + t] = c[t];
  return x;
}

Vector ProjectiveModule::generator(size_t gen) const {
  Vector x(dim_);
  const Vector& c = alg_->projective_top(vertices_[gen]);
  for (size_t t = 0; t < c.size(); ++t) x[offsets_[gen] + t] = c[t];
  return x;
}

Vector ProjectiveModule::component(const Vector& x, size_t gen) const {
  const Subspace& s = alg_->projective_space(vertices_[gen]);
  const Field& F = alg_->field();
  Vector a(alg_->dim());
  for (size_t t = 0; t < s.dim(); ++t) {
    const Rational& c = x[offsets_[gen] + t];
    if (!c.is_zero()) axpy(F, a, c, s.basis_vector(t));
  }
  return a;
}

// ---------------------------------------------------------------------------

Subspace radical_submodule(const RightModule& m) {
  const Subspace& rad = m.algebra()->radical();
  std::vector<Vector> gens;
  for (size_t i = 0; i < rad.dim(); ++i) {
    Matrix a = m.action_of(rad.basis_vector(i));
    for (size_t r = 0; r < a.rows(); ++r) gens.push_back(a.row(r));
  }
  return Subspace::span(m.field(), m.dim(), gens);
}

Cover projective_cover(const RightModule& m) {
  m.algebra()->require_basic();
  Cover c;
  Subspace acc = radical_submodule(m);
  for (size_t v = 0; v < m.algebra()->num_vertices(); ++v) {
    const Subspace& mv = m.vertex_space(v);
    for (size_t i = 0; i < mv.dim(); ++i) {
      Vector x = mv.basis_vector(i);
      if (acc.contains(x)) continue;
      acc = acc.sum(Subspace::span(m.field(), m.dim(), {x}));
      c.vertices.push_back(v);
      c.generators.push_back(std::move(x));
    }
  }
  return c;
}

Matrix cover_map(const ProjectiveModule& p, const std::vector<Vector>& gens, const RightModule& m) {
  Matrix f(p.dim(), m.dim());
  const Algebra& A = *p.algebra();
  for (size_t l = 0; l < p.generators(); ++l) {
    const Subspace& s = A.projective_space(p.vertices()[l]);
    for (size_t t = 0; t < s.dim(); ++t) f.set_row(p.offset(l) + t, m.act(gens[l], s.basis_vector(t)));
  }
  return f;
}

size_t Resolution::length() const {
  size_t len = 0;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].dim() > 0) len = i;
  }
  return len;
}

Resolution minimal_resolution(const RightModule& m, size_t length_bound) {
  const Field& F = m.field();
  const AlgebraPtr& alg = m.algebra();
  Resolution r;
  Cover c0 = projective_cover(m);
  r.terms.emplace_back(alg, c0.vertices);
  r.augmentation = cover_map(r.terms.back(), c0.generators, m);
  Subspace kernel = left_kernel(F, r.augmentation);
  for (size_t i = 1; i <= length_bound && kernel.dim() > 0; ++i) {
    const ProjectiveModule& prev = r.terms.back();
    RightModule kmod = submodule(prev.module(), kernel);
    Cover c = projective_cover(kmod);
    Matrix kb = kernel.basis();
    std::vector<Vector> gens;
    for (const auto& g : c.generators) gens.push_back(vec_mat(F, g, kb));
    ProjectiveModule next(alg, c.vertices);
    Matrix d = cover_map(next, gens, prev.module());
    std::vector<std::vector<Vector>> elems(gens.size());
    for (size_t l = 0; l < gens.size(); ++l)
      for (size_t j = 0; j < prev.generators(); ++j) elems[l].push_back(prev.component(gens[l], j));
    kernel = left_kernel(F, d);
    r.terms.push_back(std::move(next));
    r.differentials.push_back(std::move(d));
    r.elements.push_back(std::move(elems));
  }
  r.complete = kernel.dim() == 0;
  return r;
}

Presentation present(const RightModule& m) {
  const Field& F = m.field();
  Resolution r = minimal_resolution(m, 1);
  Presentation p;
  p.top = r.terms[0];
  Cover c;
  for (size_t j = 0; j < p.top.generators(); ++j) p.generators.push_back(vec_mat(F, p.top.generator(j), r.augmentation));
  if (r.terms.size() > 1) {
    p.relation_vertices = r.terms[1].vertices();
    p.relations = r.elements[0];
  }
  LeftSolver solver(F, r.augmentation);
  p.section.resize(m.dim());
  for (size_t k = 0; k < m.dim(); ++k) {
    auto z = solver.solve(unit_vector(m.dim(), k));
    if (!z) throw InternalError("cover map is not surjective");
    for (size_t j = 0; j < p.top.generators(); ++j) p.section[k].push_back(p.top.component(*z, j));
  }
  return p;
}

GlobalDimension global_dimension(AlgebraPtr alg, size_t bound) {
  alg->require_basic();
  GlobalDimension g;
  g.finite = true;
  for (size_t v = 0; v < alg->num_vertices(); ++v) {
    Resolution r = minimal_resolution(simple_module(alg, v), bound);
    if (!r.complete) return {false, bound + 1};
    g.value = std::max(g.value, r.length());
  }
  return g;
}

size_t projective_dimension_bound(const Resolution& r) { return r.length(); }

// ---------------------------------------------------------------------------

Subquotient::Subquotient(Subspace cycles, const Subspace& boundaries) : cycles_(std::move(cycles)) {
  std::vector<Vector> coords;
  for (size_t i = 0; i < boundaries.dim(); ++i) coords.push_back(cycles_.coordinates(boundaries.basis_vector(i)));
  boundaries_in_cycles_ = Subspace::span(cycles_.field(), cycles_.dim(), coords);
  free_ = boundaries_in_cycles_.free_columns();
}

Vector Subquotient::coords(const Vector& v) const {
  return boundaries_in_cycles_.quotient_coords(cycles_.coordinates(v));
}

Vector Subquotient::representative(size_t i) const { return cycles_.basis_vector(free_[i]); }

Matrix Subquotient::induced(const Matrix& ambient_map) const { return induced(ambient_map, *this); }

Matrix Subquotient::induced(const Matrix& ambient_map, const Subquotient& target) const {
  Matrix r(dim(), target.dim());
  const Field& F = cycles_.field();
  for (size_t i = 0; i < dim(); ++i) r.set_row(i, target.coords(vec_mat(F, representative(i), ambient_map)));
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Subspace> vertex_spaces_of(const Algebra& A, const std::vector<Matrix>& acts, size_t dim) {
  std::vector<Subspace> out;
  for (size_t v = 0; v < A.num_vertices(); ++v) {
    Matrix m(dim, dim);
    const Vector& e = A.idempotent(v);
    for (size_t i = 0; i < acts.size(); ++i) axpy(A.field(), m, e[i], acts[i]);
    out.push_back(Subspace::row_space(A.field(), m));
  }
  return out;
}

Matrix combine(const Field& F, const std::vector<Matrix>& acts, const Vector& a, size_t dim) {
  Matrix m(dim, dim);
  for (size_t i = 0; i < acts.size(); ++i) axpy(F, m, a[i], acts[i]);
  return m;
}

struct BlockLayout {
  std::vector<size_t> offsets;
  size_t dim = 0;
};

BlockLayout layout(const std::vector<size_t>& vertices, const std::vector<Subspace>& spaces) {
  BlockLayout b;
  for (size_t v : vertices) {
    b.offsets.push_back(b.dim);
    b.dim += spaces[v].dim();
  }
  return b;
}

// Tensor complex differential P^{-i} (x) N -> P^{-(i-1)} (x) N on sums of e_v N.
Matrix tensor_differential(const Field& F, const Resolution& r, size_t i, const std::vector<Matrix>& left,
                           size_t ndim, const std::vector<Subspace>& spaces) {
  const auto& src_v = r.terms[i].vertices();
  const auto& tgt_v = r.terms[i - 1].vertices();
  BlockLayout s = layout(src_v, spaces), t = layout(tgt_v, spaces);
  Matrix d(s.dim, t.dim);
  for (size_t l = 0; l < src_v.size(); ++l)
    for (size_t j = 0; j < tgt_v.size(); ++j) {
      const Vector& el = r.elements[i - 1][l][j];
      if (is_zero(el)) continue;
      Matrix lam = combine(F, left, el, ndim);
      const Subspace& from = spaces[src_v[l]];
      const Subspace& to = spaces[tgt_v[j]];
      for (size_t c = 0; c < from.dim(); ++c) {
        Vector img = to.coordinates(vec_mat(F, from.basis_vector(c), lam));
        for (size_t q = 0; q < img.size(); ++q) d.at(s.offsets[l] + c, t.offsets[j] + q) = img[q];
      }
    }
  return d;
}

// Hom complex differential Hom(P^{-(i-1)}, Y) -> Hom(P^{-i}, Y) on sums of Y e_v.
Matrix hom_differential(const Field& F, const Resolution& r, size_t i, const RightModule& y) {
  const auto& src_v = r.terms[i - 1].vertices();
  const auto& tgt_v = r.terms[i].vertices();
  std::vector<Subspace> spaces;
  for (size_t v = 0; v < y.algebra()->num_vertices(); ++v) spaces.push_back(y.vertex_space(v));
  BlockLayout s = layout(src_v, spaces), t = layout(tgt_v, spaces);
  Matrix d(s.dim, t.dim);
  for (size_t j = 0; j < src_v.size(); ++j)
    for (size_t l = 0; l < tgt_v.size(); ++l) {
      const Vector& el = r.elements[i - 1][l][j];
      if (is_zero(el)) continue;
      Matrix rho = y.action_of(el);
      const Subspace& from = spaces[src_v[j]];
      const Subspace& to = spaces[tgt_v[l]];
      for (size_t c = 0; c < from.dim(); ++c) {
        Vector img = to.coordinates(vec_mat(F, from.basis_vector(c), rho));
        for (size_t q = 0; q < img.size(); ++q) d.at(s.offsets[j] + c, t.offsets[l] + q) = img[q];
      }
    }
  return d;
}

size_t block_dim(const std::vector<size_t>& vertices, const std::vector<Subspace>& spaces) {
  return layout(vertices, spaces).dim;
}

// Whether term index k is available (or known to vanish).
bool term_known(const Resolution& r, size_t k) { return k < r.terms.size() || r.complete; }

void require_terms(const Resolution& r, size_t k, const char* what) {
  if (!term_known(r, k)) {
    throw UndeterminedError(std::string(what) + " undetermined beyond bound: resolution computed to length " +
                            std::to_string(r.terms.size() - 1));
  }
}

struct TorData {
  Subspace cycles;
  Subspace boundaries;
  size_t ambient = 0;
};

TorData tor_cycles(const Resolution& r, const std::vector<Matrix>& left, size_t ndim,
                   const std::vector<Subspace>& spaces, size_t i) {
  const Field& F = r.terms[0].algebra()->field();
  require_terms(r, i + 1, "Tor");
  TorData td;
  if (i >= r.terms.size()) {
    td.cycles = Subspace(F, 0);
    td.boundaries = Subspace(F, 0);
    return td;
  }
  td.ambient = block_dim(r.terms[i].vertices(), spaces);
  if (i == 0) {
    td.cycles = Subspace::full(F, td.ambient);
  } else {
    td.cycles = left_kernel(F, tensor_differential(F, r, i, left, ndim, spaces));
  }
  if (i + 1 < r.terms.size()) {
    td.boundaries = Subspace::row_space(F, tensor_differential(F, r, i + 1, left, ndim, spaces));
  } else {
    td.boundaries = Subspace(F, td.ambient);
  }
  return td;
}

}  // namespace

size_t tor_dim_from_resolution(const Resolution& r, const std::vector<Matrix>& left_action, size_t i) {
  const Algebra& A = *r.terms[0].algebra();
  size_t ndim = left_action.empty() ? 0 : left_action[0].rows();
  auto spaces = vertex_spaces_of(A, left_action, ndim);
  TorData td = tor_cycles(r, left_action, ndim, spaces, i);
  return td.cycles.dim() - td.boundaries.dim();
}

RightModule tor_from_resolution(const Resolution& r, const Bimodule& n, size_t i) {
  const AlgebraPtr& alg = r.terms[0].algebra();
  const Field& F = alg->field();
  std::vector<Subspace> spaces;
  for (size_t v = 0; v < alg->num_vertices(); ++v) spaces.push_back(n.left_vertex_space(v));
  TorData td = tor_cycles(r, n.left_actions(), n.dim(), spaces, i);
  if (td.ambient == 0) return RightModule::zero(alg);
  Subquotient h(td.cycles, td.boundaries);
  const auto& verts = r.terms[i].vertices();
  std::vector<Matrix> act;
  for (size_t b = 0; b < alg->dim(); ++b) {
    std::vector<Matrix> blocks;
    for (size_t v : verts) blocks.push_back(restrict_to(spaces[v], n.action(b)));
    act.push_back(h.induced(block_diagonal(blocks)));
  }
  (void)F;
  return RightModule(alg, h.dim(), std::move(act));
}

RightModule tor(const RightModule& m, const Bimodule& n, size_t i) {
  return tor_from_resolution(minimal_resolution(m, i + 1), n, i);
}

size_t tor_dim(const RightModule& m, const Bimodule& n, size_t i) {
  return tor_dim_from_resolution(minimal_resolution(m, i + 1), n.left_actions(), i);
}

size_t tor_dim_mirrored(const RightModule& m, const Bimodule& n, size_t i) {
  auto op = std::make_shared<const Algebra>(m.algebra()->opposite());
  RightModule nop(op, n.dim(), n.left_actions());
  Resolution r = minimal_resolution(nop, i + 1);
  return tor_dim_from_resolution(r, m.actions(), i);
}

// ---------------------------------------------------------------------------

size_t ext_dim_from_resolution(const Resolution& r, const RightModule& y, size_t i) {
  const Field& F = y.field();
  require_terms(r, i + 1, "Ext");
  if (i >= r.terms.size()) return 0;
  std::vector<Subspace> spaces;
  for (size_t v = 0; v < y.algebra()->num_vertices(); ++v) spaces.push_back(y.vertex_space(v));
  size_t amb = block_dim(r.terms[i].vertices(), spaces);
  size_t cyc = amb;
  if (i + 1 < r.terms.size()) cyc = amb - rank(F, hom_differential(F, r, i + 1, y));
  size_t bnd = i == 0 ? 0 : rank(F, hom_differential(F, r, i, y));
  return cyc - bnd;
}

size_t ext_dim(const RightModule& x, const RightModule& y, size_t i) {
  return ext_dim_from_resolution(minimal_resolution(x, i + 1), y, i);
}

ChainLift lift_chain_map(const Resolution& r, const RightModule& m, const Matrix& endo, size_t upto,
                         std::mt19937_64* perturb) {
  const Field& F = m.field();
  const Algebra& A = *m.algebra();
  ChainLift lift;
  size_t top = std::min(upto, r.terms.size() - 1);
  for (size_t i = 0; i <= top; ++i) {
    const ProjectiveModule& p = r.terms[i];
    const Matrix& down = i == 0 ? r.augmentation : r.differentials[i - 1];
    LeftSolver solver(F, down);
    std::optional<Subspace> ker;
    if (perturb) ker = left_kernel(F, down);
    std::vector<Vector> images;
    for (size_t l = 0; l < p.generators(); ++l) {
      Vector g = p.generator(l);
      Vector target = i == 0 ? vec_mat(F, vec_mat(F, g, r.augmentation), endo)
                             : vec_mat(F, vec_mat(F, g, down), lift.maps[i - 1]);
      auto z = solver.solve(target);
      if (!z) throw InternalError("chain map lifting has no solution");
      if (perturb && ker->dim() > 0) {
        for (size_t t = 0; t < ker->dim(); ++t) axpy(F, *z, random_scalar(F, *perturb, 2), ker->basis_vector(t));
      }
      images.push_back(vec_mat(F, *z, p.module().action_of(A.idempotent(p.vertices()[l]))));
    }
    lift.maps.push_back(cover_map(p, images, p.module()));
  }
  return lift;
}

Bimodule ext_bimodule(const Bimodule& x, const Bimodule& y, size_t i, ExtBimoduleOptions opts) {
  const AlgebraPtr& alg = x.algebra();
  const Field& F = alg->field();
  const Algebra& A = *alg;
  Resolution r = minimal_resolution(x, i + 1);
  require_terms(r, i + 1, "Ext");
  if (i >= r.terms.size()) {
    return Bimodule(alg, 0, std::vector<Matrix>(A.dim(), Matrix(0, 0)), std::vector<Matrix>(A.dim(), Matrix(0, 0)));
  }
  std::vector<Subspace> spaces;
  for (size_t v = 0; v < A.num_vertices(); ++v) spaces.push_back(y.vertex_space(v));
  const auto& verts = r.terms[i].vertices();
  BlockLayout lay = layout(verts, spaces);
  Subspace cycles = i + 1 < r.terms.size() ? left_kernel(F, hom_differential(F, r, i + 1, y))
                                           : Subspace::full(F, lay.dim);
  Subspace bounds = i == 0 ? Subspace(F, lay.dim) : Subspace::row_space(F, hom_differential(F, r, i, y));
  Subquotient h(cycles, bounds);

  std::vector<Matrix> left, right;
  for (size_t b = 0; b < A.dim(); ++b) {
    std::vector<Matrix> blocks;
    for (size_t v : verts) blocks.push_back(restrict_to(spaces[v], y.left_action(b)));
    left.push_back(h.induced(block_diagonal(blocks)));
  }
  const ProjectiveModule& p = r.terms[i];
  for (size_t b = 0; b < A.dim(); ++b) {
    ChainLift lift = lift_chain_map(r, x, x.left_action(b), i, opts.perturb);
    const Matrix& ci = lift.maps[i];
    Matrix pre(lay.dim, lay.dim);
    for (size_t l = 0; l < p.generators(); ++l) {
      Vector img = vec_mat(F, p.generator(l), ci);
      for (size_t j = 0; j < p.generators(); ++j) {
        Vector el = p.component(img, j);
        if (is_zero(el)) continue;
        Matrix rho = y.action_of(el);
        const Subspace& from = spaces[verts[j]];
        const Subspace& to = spaces[verts[l]];
        for (size_t c = 0; c < from.dim(); ++c) {
          Vector v = to.coordinates(vec_mat(F, from.basis_vector(c), rho));
          for (size_t q = 0; q < v.size(); ++q) pre.at(lay.offsets[j] + c, lay.offsets[l] + q) = v[q];
        }
      }
    }
    right.push_back(h.induced(pre));
  }
  return Bimodule(alg, h.dim(), std::move(right), std::move(left));
}

}  // namespace tcoh
