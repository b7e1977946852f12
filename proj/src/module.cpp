#include "tcoh/module.hpp"

#include "tcoh/errors.hpp"

namespace tcoh {

RightModule::RightModule(AlgebraPtr alg, size_t dim, std::vector<Matrix> action)
    : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != alg_->dim()) throw InputError("module needs one action matrix per basis element");
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("action matrix has wrong shape");
  }
  vertex_spaces_.reserve(alg_->num_vertices());
  for (size_t v = 0; v < alg_->num_vertices(); ++v) {
    vertex_spaces_.push_back(Subspace::row_space(field(), action_of(alg_->idempotent(v))));
  }
}

RightModule RightModule::zero(AlgebraPtr alg) {
  size_t n = alg->dim();
  return RightModule(std::move(alg), 0, std::vector<Matrix>(n, Matrix(0, 0)));
}

Matrix RightModule::action_of(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (size_t i = 0; i < a.size(); ++i) axpy(field(), m, a[i], action_[i]);
  return m;
}

Vector RightModule::act(const Vector& x, const Vector& a) const {
  Vector r(dim_);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    axpy(field(), r, a[i], vec_mat(field(), x, action_[i]));
  }
  return r;
}

std::vector<size_t> RightModule::dimension_vector() const {
  std::vector<size_t> dv;
  for (const auto& s : vertex_spaces_) dv.push_back(s.dim());
  return dv;
}

void RightModule::validate() const {
  const Field& F = field();
  const Algebra& A = *alg_;
  if (action_of(A.unit()) != Matrix::identity(F, dim_)) throw InputError("unit does not act as identity");
  for (size_t i = 0; i < A.dim(); ++i)
    for (size_t j = 0; j < A.dim(); ++j) {
      if (multiply(F, action_[i], action_[j]) != action_of(A.product(i, j))) {
        throw InputError("right action is not compatible with multiplication on (" + A.basis_names()[i] +
                         ", " + A.basis_names()[j] + ")");
      }
    }
}

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgebraPtr alg, size_t dim, std::vector<Matrix> right, std::vector<Matrix> left)
    : RightModule(std::move(alg), dim, std::move(right)), left_(std::move(left)) {
  if (left_.size() != alg_->dim()) throw InputError("bimodule needs one left action matrix per basis element");
  for (const auto& m : left_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("left action matrix has wrong shape");
  }
  for (size_t v = 0; v < alg_->num_vertices(); ++v) {
    left_vertex_spaces_.push_back(Subspace::row_space(field(), left_action_of(alg_->idempotent(v))));
  }
}

Matrix Bimodule::left_action_of(const Vector& a) const {
  Matrix m(dim_, dim_);
  for (size_t i = 0; i < a.size(); ++i) axpy(field(), m, a[i], left_[i]);
  return m;
}

Vector Bimodule::left_act(const Vector& a, const Vector& x) const {
  Vector r(dim_);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    axpy(field(), r, a[i], vec_mat(field(), x, left_[i]));
  }
  return r;
}

void Bimodule::validate() const {
  RightModule::validate();
  const Field& F = field();
  const Algebra& A = *alg_;
  if (left_action_of(A.unit()) != Matrix::identity(F, dim_)) {
    throw InputError("unit does not act as identity on the left");
  }
  for (size_t i = 0; i < A.dim(); ++i)
    for (size_t j = 0; j < A.dim(); ++j) {
      if (multiply(F, left_[j], left_[i]) != left_action_of(A.product(i, j))) {
        throw InputError("left action is not associative on (" + A.basis_names()[i] + ", " +
                         A.basis_names()[j] + ")");
      }
      if (multiply(F, left_[i], action_[j]) != multiply(F, action_[j], left_[i])) {
        throw InputError("left and right actions do not commute on (" + A.basis_names()[i] + ", " +
                         A.basis_names()[j] + ")");
      }
    }
}

// ---------------------------------------------------------------------------

bool intertwines(const RightModule& src, const RightModule& tgt, const Matrix& f) {
  const Field& F = src.field();
  if (f.rows() != src.dim() || f.cols() != tgt.dim()) return false;
  for (size_t i = 0; i < src.algebra()->dim(); ++i) {
    if (multiply(F, src.action(i), f) != multiply(F, f, tgt.action(i))) return false;
  }
  return true;
}

bool is_isomorphism(const Field& F, const Matrix& f) {
  return f.rows() == f.cols() && rank(F, f) == f.rows();
}

Bimodule regular_bimodule(AlgebraPtr alg) {
  std::vector<Matrix> right, left;
  for (size_t i = 0; i < alg->dim(); ++i) {
    right.push_back(alg->right_mult(i));
    left.push_back(alg->left_mult(i));
  }
  size_t n = alg->dim();
  return Bimodule(std::move(alg), n, std::move(right), std::move(left));
}

RightModule regular_module(AlgebraPtr alg) {
  std::vector<Matrix> right;
  for (size_t i = 0; i < alg->dim(); ++i) right.push_back(alg->right_mult(i));
  size_t n = alg->dim();
  return RightModule(std::move(alg), n, std::move(right));
}

Bimodule dual_bimodule(AlgebraPtr alg) {
  std::vector<Matrix> right, left;
  for (size_t i = 0; i < alg->dim(); ++i) {
    right.push_back(alg->left_mult(i).transpose());
    left.push_back(alg->right_mult(i).transpose());
  }
  size_t n = alg->dim();
  return Bimodule(std::move(alg), n, std::move(right), std::move(left));
}

RightModule simple_module(AlgebraPtr alg, size_t v) {
  alg->require_basic();
  const Subspace& ev = alg->projective_space(v);
  RightModule reg = regular_module(alg);
  RightModule pv = submodule(reg, ev);
  // e_v rad = e_v A ∩ rad, spanned by e_v r for r in a basis of rad
  std::vector<Vector> gens;
  const Subspace& rad = alg->radical();
  for (size_t i = 0; i < rad.dim(); ++i) {
    Vector x = alg->multiply(alg->idempotent(v), rad.basis_vector(i));
    gens.push_back(ev.coordinates(x));
  }
  return quotient_module(pv, Subspace::span(alg->field(), pv.dim(), gens));
}

Matrix restrict_to(const Subspace& sub, const Matrix& act) {
  const Field& F = sub.field();
  Matrix r(sub.dim(), sub.dim());
  for (size_t i = 0; i < sub.dim(); ++i) {
    Vector img = vec_mat(F, sub.basis_vector(i), act);
    r.set_row(i, sub.coordinates(img));
  }
  return r;
}

Matrix induce_on_quotient(const Subspace& sub, const Matrix& act) {
  const Field& F = sub.field();
  auto free = sub.free_columns();
  Matrix r(free.size(), free.size());
  for (size_t i = 0; i < free.size(); ++i) {
    Vector img = act.row(free[i]);
    r.set_row(i, sub.quotient_coords(img));
  }
  (void)F;
  return r;
}

RightModule submodule(const RightModule& m, const Subspace& sub) {
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(restrict_to(sub, a));
  return RightModule(m.algebra(), sub.dim(), std::move(act));
}

RightModule quotient_module(const RightModule& m, const Subspace& sub) {
  std::vector<Matrix> act;
  for (const auto& a : m.actions()) act.push_back(induce_on_quotient(sub, a));
  return RightModule(m.algebra(), m.dim() - sub.dim(), std::move(act));
}

Bimodule quotient_bimodule(const Bimodule& m, const Subspace& sub) {
  std::vector<Matrix> right, left;
  for (const auto& a : m.actions()) right.push_back(induce_on_quotient(sub, a));
  for (const auto& a : m.left_actions()) left.push_back(induce_on_quotient(sub, a));
  return Bimodule(m.algebra(), m.dim() - sub.dim(), std::move(right), std::move(left));
}

Subspace generated_submodule(const RightModule& m, const std::vector<Vector>& gens) {
  std::vector<Vector> span;
  for (const auto& g : gens) {
    for (size_t i = 0; i < m.algebra()->dim(); ++i) span.push_back(vec_mat(m.field(), g, m.action(i)));
  }
  // the unit is a combination of basis elements, so g itself lies in the span
  return Subspace::span(m.field(), m.dim(), span);
}

RightModule direct_sum(const std::vector<RightModule>& parts) {
  if (parts.empty()) throw InternalError("direct_sum of nothing");
  const AlgebraPtr& alg = parts.front().algebra();
  size_t d = 0;
  for (const auto& p : parts) d += p.dim();
  std::vector<Matrix> act;
  for (size_t i = 0; i < alg->dim(); ++i) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action(i));
    act.push_back(block_diagonal(blocks));
  }
  return RightModule(alg, d, std::move(act));
}

uint64_t rand_below(std::mt19937_64& rng, uint64_t n) { return n == 0 ? 0 : rng() % n; }

Rational random_scalar(const Field& F, std::mt19937_64& rng, int64_t spread) {
  int64_t v = static_cast<int64_t>(rand_below(rng, static_cast<uint64_t>(2 * spread + 1))) - spread;
  return F.from_int(v);
}

RightModule random_module(AlgebraPtr alg, std::mt19937_64& rng, size_t max_dim) {
  alg->require_basic();
  const Field& F = alg->field();
  RightModule reg = regular_module(alg);
  for (int attempt = 0; attempt < 200; ++attempt) {
    size_t count = 1 + rand_below(rng, 2);
    std::vector<RightModule> parts;
    for (size_t c = 0; c < count; ++c) {
      size_t v = rand_below(rng, alg->num_vertices());
      parts.push_back(submodule(reg, alg->projective_space(v)));
    }
    RightModule p = direct_sum(parts);
    size_t relations = rand_below(rng, 3);
    std::vector<Vector> gens;
    for (size_t r = 0; r < relations; ++r) {
      // homogeneous at a random vertex so the relation is not generic
      Vector x(p.dim());
      for (auto& c : x) c = rand_below(rng, 2) ? random_scalar(F, rng, 1) : Rational();
      size_t v = rand_below(rng, alg->num_vertices());
      gens.push_back(vec_mat(F, x, p.action_of(alg->idempotent(v))));
    }
    RightModule m = quotient_module(p, generated_submodule(p, gens));
    if (m.dim() > 0 && m.dim() <= max_dim) return m;
  }
  throw InternalError("random_module: could not hit the requested dimension range");
}

}  // namespace tcoh
