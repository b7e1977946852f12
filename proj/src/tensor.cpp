#include "tcoh/tensor.hpp"

#include "tcoh/errors.hpp"

namespace tcoh {

namespace {

void same_algebra(const RightModule& a, const RightModule& b) {
  if (a.algebra() != b.algebra() && a.algebra()->basis_names() != b.algebra()->basis_names()) {
    throw InputError("modules live over different algebras");
  }
}

// Rows of m restricted to the given columns.
Matrix select_columns(const Matrix& m, const std::vector<size_t>& cols) {
  Matrix r(m.rows(), cols.size());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t c = 0; c < cols.size(); ++c) r.at(i, c) = m.at(i, cols[c]);
  return r;
}

}  // namespace

TensorProduct::TensorProduct(const RightModule& m, const Bimodule& n) : m_(m), n_(n) {
  same_algebra(m, n);
  build();
}

TensorProduct::TensorProduct(const Bimodule& m, const Bimodule& n) : m_(m), n_(n), m_bimodule_(m) {
  same_algebra(m, n);
  build();
}

void TensorProduct::build() {
  const AlgebraPtr& alg = m_.algebra();
  const Field& F = alg->field();
  pres_ = present(m_);
  const auto& verts = pres_.top.vertices();
  for (size_t j = 0; j < verts.size(); ++j) {
    offsets_.push_back(ambient_);
    size_t d = n_.left_vertex_space(verts[j]).dim();
    for (size_t c = 0; c < d; ++c) block_of_.push_back(j);
    ambient_ += d;
  }

  std::vector<Vector> rels;
  for (size_t l = 0; l < pres_.relation_vertices.size(); ++l) {
    const Subspace& src = n_.left_vertex_space(pres_.relation_vertices[l]);
    std::vector<std::pair<size_t, Matrix>> lams;
    for (size_t j = 0; j < verts.size(); ++j) {
      const Vector& el = pres_.relations[l][j];
      if (!is_zero(el)) lams.emplace_back(j, n_.left_action_of(el));
    }
    for (size_t c = 0; c < src.dim(); ++c) {
      Vector t = src.basis_vector(c);
      Vector w(ambient_);
      for (const auto& [j, lam] : lams) {
        Vector img = n_.left_vertex_space(verts[j]).coordinates(vec_mat(F, t, lam));
        for (size_t q = 0; q < img.size(); ++q) w[offsets_[j] + q] = img[q];
      }
      rels.push_back(std::move(w));
    }
  }
  relations_ = Subspace::span(F, ambient_, rels);
  free_ = relations_.free_columns();
  quotient_ = Matrix(ambient_, free_.size());
  for (size_t w = 0; w < ambient_; ++w) quotient_.set_row(w, relations_.quotient_coords(unit_vector(ambient_, w)));

  std::vector<Matrix> acts;
  for (size_t b = 0; b < alg->dim(); ++b) {
    Matrix act(dim(), dim());
    for (size_t i = 0; i < dim(); ++i) {
      size_t j = block_of_[free_[i]];
      const Subspace& e = n_.left_vertex_space(verts[j]);
      Vector u = vec_mat(F, e.basis_vector(free_[i] - offsets_[j]), n_.action(b));
      Vector c = e.coordinates(u);
      Vector w(ambient_);
      for (size_t q = 0; q < c.size(); ++q) w[offsets_[j] + q] = c[q];
      act.set_row(i, vec_mat(F, w, quotient_));
    }
    acts.push_back(std::move(act));
  }
  result_ = std::make_shared<RightModule>(alg, dim(), acts);
  cache_ = std::make_shared<Cache>(m_.dim());

  if (m_bimodule_) {
    std::vector<Matrix> left;
    for (size_t b = 0; b < alg->dim(); ++b) {
      Matrix lm(dim(), dim());
      for (size_t i = 0; i < dim(); ++i) {
        auto [x, t] = representative(i);
        lm.set_row(i, class_of(vec_mat(F, x, m_bimodule_->left_action(b)), t));
      }
      left.push_back(std::move(lm));
    }
    result_bimodule_.emplace(alg, dim(), std::move(acts), std::move(left));
  }
}

const Bimodule& TensorProduct::bimodule() const {
  if (!result_bimodule_) throw InternalError("tensor product has no left action");
  return *result_bimodule_;
}

const Matrix& TensorProduct::xi(size_t k) const {
  std::call_once(cache_->flags[k], [&] {
    const Field& F = m_.field();
    const auto& verts = pres_.top.vertices();
    Matrix x(n_.dim(), dim());
    for (size_t j = 0; j < verts.size(); ++j) {
      const Vector& a = pres_.section[k][j];
      if (is_zero(a)) continue;
      const Subspace& e = n_.left_vertex_space(verts[j]);
      Matrix lam = select_columns(n_.left_action_of(a), e.pivots());
      Matrix block(e.dim(), dim());
      for (size_t c = 0; c < e.dim(); ++c) block.set_row(c, quotient_.row(offsets_[j] + c));
      x = add(F, x, multiply(F, lam, block));
    }
    cache_->xi[k] = std::move(x);
  });
  return cache_->xi[k];
}

Vector TensorProduct::class_of(const Vector& x, const Vector& t) const {
  const Field& F = m_.field();
  Vector r(dim());
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    axpy(F, r, x[k], vec_mat(F, t, xi(k)));
  }
  return r;
}

std::pair<Vector, Vector> TensorProduct::representative(size_t i) const {
  size_t j = block_of_[free_[i]];
  const Subspace& e = n_.left_vertex_space(pres_.top.vertices()[j]);
  return {pres_.generators[j], e.basis_vector(free_[i] - offsets_[j])};
}

Matrix TensorProduct::map_left(const Matrix& f, const TensorProduct& target) const {
  const Field& F = m_.field();
  Matrix r(dim(), target.dim());
  for (size_t i = 0; i < dim(); ++i) {
    auto [x, t] = representative(i);
    r.set_row(i, target.class_of(vec_mat(F, x, f), t));
  }
  return r;
}

Matrix TensorProduct::map_right(const Matrix& g, const TensorProduct& target) const {
  const Field& F = m_.field();
  Matrix r(dim(), target.dim());
  for (size_t i = 0; i < dim(); ++i) {
    auto [x, t] = representative(i);
    r.set_row(i, target.class_of(x, vec_mat(F, t, g)));
  }
  return r;
}

RightModule tensor_over(const RightModule& m, const Bimodule& s) { return TensorProduct(m, s).module(); }

Bimodule tensor_over(const Bimodule& m, const Bimodule& s) { return TensorProduct(m, s).bimodule(); }

// ---------------------------------------------------------------------------

HomSpace::HomSpace(const RightModule& s, const RightModule& y) : s_(s), y_(y) {
  same_algebra(s, y);
  build();
}

HomSpace::HomSpace(const Bimodule& s, const RightModule& y) : s_(s), s_left_(s.left_actions()), y_(y) {
  same_algebra(s, y);
  build();
}

void HomSpace::build() {
  const AlgebraPtr& alg = s_.algebra();
  const Field& F = alg->field();
  pres_ = present(s_);
  const auto& verts = pres_.top.vertices();
  for (size_t v : verts) {
    offsets_.push_back(ambient_);
    ambient_ += y_.vertex_space(v).dim();
  }
  size_t nrel = pres_.relation_vertices.size();
  Matrix c(ambient_, nrel * y_.dim());
  for (size_t j = 0; j < verts.size(); ++j) {
    const Subspace& e = y_.vertex_space(verts[j]);
    for (size_t l = 0; l < nrel; ++l) {
      const Vector& el = pres_.relations[l][j];
      if (is_zero(el)) continue;
      Matrix rho = y_.action_of(el);
      for (size_t q = 0; q < e.dim(); ++q) {
        Vector img = vec_mat(F, e.basis_vector(q), rho);
        for (size_t t = 0; t < img.size(); ++t) c.at(offsets_[j] + q, l * y_.dim() + t) = img[t];
      }
    }
  }
  space_ = nrel == 0 ? Subspace::full(F, ambient_) : left_kernel(F, c);

  if (!s_left_.empty()) {
    std::vector<Matrix> acts;
    std::vector<Matrix> basis_maps;
    for (size_t i = 0; i < dim(); ++i) basis_maps.push_back(to_matrix(unit_vector(dim(), i)));
    for (size_t b = 0; b < alg->dim(); ++b) {
      Matrix act(dim(), dim());
      for (size_t i = 0; i < dim(); ++i) act.set_row(i, from_matrix(multiply(F, s_left_[b], basis_maps[i])));
      acts.push_back(std::move(act));
    }
    result_ = std::make_shared<RightModule>(alg, dim(), std::move(acts));
  }
}

const RightModule& HomSpace::module() const {
  if (!result_) throw InternalError("Hom space of a one-sided module has no action");
  return *result_;
}

Matrix HomSpace::to_matrix(const Vector& h) const {
  const Field& F = s_.field();
  const auto& verts = pres_.top.vertices();
  Vector u(ambient_);
  for (size_t i = 0; i < h.size(); ++i) {
    if (!h[i].is_zero()) axpy(F, u, h[i], space_.basis_vector(i));
  }
  std::vector<Vector> ys;
  for (size_t j = 0; j < verts.size(); ++j) {
    const Subspace& e = y_.vertex_space(verts[j]);
    Vector y(y_.dim());
    for (size_t q = 0; q < e.dim(); ++q) {
      const Rational& c = u[offsets_[j] + q];
      if (!c.is_zero()) axpy(F, y, c, e.basis_vector(q));
    }
    ys.push_back(std::move(y));
  }
  Matrix phi(s_.dim(), y_.dim());
  for (size_t k = 0; k < s_.dim(); ++k) {
    Vector row(y_.dim());
    for (size_t j = 0; j < verts.size(); ++j) {
      const Vector& a = pres_.section[k][j];
      if (is_zero(a) || is_zero(ys[j])) continue;
      row = add(F, row, y_.act(ys[j], a));
    }
    phi.set_row(k, row);
  }
  return phi;
}

Vector HomSpace::from_matrix(const Matrix& phi) const {
  const Field& F = s_.field();
  const auto& verts = pres_.top.vertices();
  Vector u(ambient_);
  for (size_t j = 0; j < verts.size(); ++j) {
    Vector c = y_.vertex_space(verts[j]).coordinates(vec_mat(F, pres_.generators[j], phi));
    for (size_t q = 0; q < c.size(); ++q) u[offsets_[j] + q] = c[q];
  }
  return space_.coordinates(u);
}

RightModule hom_over(const Bimodule& s, const RightModule& y) { return HomSpace(s, y).module(); }

Matrix adjunction_unit(const TensorProduct& mt, const HomSpace& h) {
  Matrix r(mt.left_factor().dim(), h.dim());
  for (size_t k = 0; k < r.rows(); ++k) r.set_row(k, h.from_matrix(mt.xi(k)));
  return r;
}

Matrix adjunction_matrix(const TensorProduct& mt, const HomSpace& lhs, const HomSpace& inner, const HomSpace& rhs) {
  const Field& F = mt.module().field();
  size_t mdim = mt.left_factor().dim();
  Matrix r(lhs.dim(), rhs.dim());
  for (size_t i = 0; i < lhs.dim(); ++i) {
    Matrix phi = lhs.to_matrix(unit_vector(lhs.dim(), i));
    Matrix psi(mdim, inner.dim());
    for (size_t k = 0; k < mdim; ++k) psi.set_row(k, inner.from_matrix(multiply(F, mt.xi(k), phi)));
    r.set_row(i, rhs.from_matrix(psi));
  }
  return r;
}

}  // namespace tcoh
