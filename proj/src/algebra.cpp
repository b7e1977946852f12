#include "tcoh/algebra.hpp"

#include <map>

#include "tcoh/errors.hpp"

namespace tcoh {

void Quiver::check_well_formed() const {
  for (const auto& a : arrows) {
    if (a.source >= vertices.size() || a.target >= vertices.size()) {
      throw InputError("arrow '" + a.name + "' refers to an unknown vertex");
    }
  }
  for (const auto& rel : relations) {
    if (rel.size() < 2) throw InputError("relations must be paths of length at least 2");
    for (size_t i = 0; i < rel.size(); ++i) {
      if (rel[i] >= arrows.size()) throw InputError("relation refers to an unknown arrow");
      if (i > 0 && arrows[rel[i - 1]].target != arrows[rel[i]].source) {
        throw InputError("relation is not a composable path");
      }
    }
  }
}

// ---------------------------------------------------------------------------

Algebra::Algebra(Spec spec) {
  F_ = spec.field;
  names_ = std::move(spec.basis_names);
  unit_ = std::move(spec.unit);
  idempotents_ = std::move(spec.idempotents);
  products_ = std::move(spec.products);
  quiver_ = std::move(spec.quiver);
  const size_t n = names_.size();
  if (n == 0) throw InputError("algebra must have a nonempty basis");
  if (unit_.size() != n) throw InputError("unit has wrong length");
  if (products_.size() != n) throw InputError("structure constant table has wrong size");
  for (auto& row : products_) {
    if (row.size() != n) throw InputError("structure constant table has wrong size");
    for (auto& v : row) {
      if (v.size() != n) throw InputError("structure constant vector has wrong length");
      for (auto& x : v) x = F_.embed(x);
    }
  }
  for (auto& x : unit_) x = F_.embed(x);
  if (idempotents_.empty()) throw InputError("at least one idempotent is required");
  for (auto& e : idempotents_) {
    if (e.size() != n) throw InputError("idempotent has wrong length");
    for (auto& x : e) x = F_.embed(x);
  }

  // associativity on all basis triples
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Vector& ij = products_[i][j];
      for (size_t k = 0; k < n; ++k) {
        Vector left(n), right(n);
        for (size_t t = 0; t < n; ++t) axpy(F_, left, ij[t], products_[t][k]);
        const Vector& jk = products_[j][k];
        for (size_t t = 0; t < n; ++t) axpy(F_, right, jk[t], products_[i][t]);
        if (left != right) {
          throw InputError("multiplication is not associative on (" + names_[i] + ", " + names_[j] +
                           ", " + names_[k] + ")");
        }
      }
    }
  for (size_t i = 0; i < n; ++i) {
    Vector b = unit_vector(n, i);
    b[i] = F_.from_int(1);
    if (multiply(unit_, b) != b || multiply(b, unit_) != b) {
      throw InputError("unit law fails on basis element " + names_[i]);
    }
  }
  Vector sum(n);
  for (size_t a = 0; a < idempotents_.size(); ++a) {
    sum = add(F_, sum, idempotents_[a]);
    if (is_zero(idempotents_[a])) throw InputError("idempotents must be nonzero");
    for (size_t b = 0; b < idempotents_.size(); ++b) {
      Vector p = multiply(idempotents_[a], idempotents_[b]);
      Vector expect = a == b ? idempotents_[a] : Vector(n);
      if (p != expect) throw InputError("idempotents are not orthogonal idempotents");
    }
  }
  if (sum != unit_) throw InputError("idempotents do not sum to the unit");
  build_derived();
}

void Algebra::build_derived() {
  const size_t n = dim();
  right_mult_.assign(n, Matrix(n, n));
  left_mult_.assign(n, Matrix(n, n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      right_mult_[j].set_row(i, products_[i][j]);  // b_i -> b_i b_j
      left_mult_[i].set_row(j, products_[i][j]);   // b_j -> b_i b_j
    }
  if (!radical_) compute_radical();
  if (radical_) basic_ = dim() - radical_->dim() == num_vertices();
  compute_generators();
  projective_.clear();
  projective_top_.clear();
  for (size_t v = 0; v < num_vertices(); ++v) {
    projective_.push_back(Subspace::row_space(F_, left_mult_of(idempotents_[v])));
    projective_top_.push_back(projective_.back().coordinates(idempotents_[v]));
  }
}

void Algebra::compute_radical() {
  const size_t n = dim();
  if (quiver_) {
    std::vector<Vector> gens;
    for (size_t i = quiver_->vertices.size(); i < n; ++i) gens.push_back(unit_vector(n, i));
    radical_ = Subspace::span(F_, n, gens);
    return;
  }
  if (F_.is_prime()) {
    compute_radical_prime();
    return;
  }
  // trace form: rad = {x : tr(R_{xy}) = 0 for all y}
  Vector tr(n);
  for (size_t k = 0; k < n; ++k)
    for (size_t t = 0; t < n; ++t) tr[k] = F_.add(tr[k], right_mult_[k].at(t, t));
  Matrix gram(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Rational s;
      for (size_t k = 0; k < n; ++k) F_.axpy_into(s, products_[i][j][k], tr[k]);
      gram.at(i, j) = s;
    }
  radical_ = left_kernel(F_, gram);
}

// For a basic split algebra rad A is the sum of e_s A e_t (s != t) and the
// kernels of the characters of the local rings e_s A e_s. The character of b is
// read off from L_b^(p^k) = chi(b)^(p^k) = chi(b) once p^k >= dim.
void Algebra::compute_radical_prime() {
  const size_t n = dim();
  const size_t nv = num_vertices();
  const uint64_t p = F_.characteristic();
  auto power = [&](Matrix m, uint64_t e) {
    Matrix r = Matrix::identity(F_, m.rows());
    while (e > 0) {
      if (e & 1) r = ::tcoh::multiply(F_, r, m);
      e >>= 1;
      if (e) m = ::tcoh::multiply(F_, m, m);
    }
    return r;
  };
  std::vector<Vector> gens;
  for (size_t s = 0; s < nv; ++s)
    for (size_t t = 0; t < nv; ++t) {
      std::vector<Vector> part;
      for (size_t i = 0; i < n; ++i) part.push_back(multiply(multiply(idempotents_[s], unit_vector(n, i)), idempotents_[t]));
      Subspace st = Subspace::span(F_, n, part);
      if (s != t) {
        for (size_t i = 0; i < st.dim(); ++i) gens.push_back(st.basis_vector(i));
        continue;
      }
      size_t m = st.dim();
      Vector chi(m);
      for (size_t i = 0; i < m; ++i) {
        Matrix l(m, m);
        for (size_t j = 0; j < m; ++j) l.set_row(j, st.coordinates(multiply(st.basis_vector(i), st.basis_vector(j))));
        Matrix f = l;
        uint64_t reach = 1;
        do {
          f = power(f, p);
          reach = reach > m / p ? m + 1 : reach * p;
        } while (reach < m);
        Rational c = f.at(0, 0);
        for (size_t a = 0; a < m; ++a)
          for (size_t b = 0; b < m; ++b)
            if (f.at(a, b) != (a == b ? c : Rational())) {
              radical_error_ = "radical unavailable: e_s A e_s is not local and split (algebra not basic over F_p)";
              return;
            }
        chi[i] = c;
      }
      Matrix col(m, 1);
      for (size_t i = 0; i < m; ++i) col.at(i, 0) = chi[i];
      Subspace ker = left_kernel(F_, col);
      for (size_t i = 0; i < ker.dim(); ++i) {
        Vector v(n);
        Vector k = ker.basis_vector(i);
        for (size_t j = 0; j < m; ++j)
          if (!k[j].is_zero()) axpy(F_, v, k[j], st.basis_vector(j));
        gens.push_back(std::move(v));
      }
    }
  Subspace j = Subspace::span(F_, n, gens);
  // j must be a nilpotent two-sided ideal
  for (size_t i = 0; i < j.dim(); ++i)
    for (size_t b = 0; b < n; ++b)
      if (!j.contains(multiply(j.basis_vector(i), unit_vector(n, b))) ||
          !j.contains(multiply(unit_vector(n, b), j.basis_vector(i)))) {
        radical_error_ = "radical unavailable: candidate radical is not an ideal (algebra not basic over F_p)";
        return;
      }
  Subspace pw = j;
  for (size_t k = 0; k <= n && pw.dim() > 0; ++k) {
    std::vector<Vector> prods;
    for (size_t a = 0; a < pw.dim(); ++a)
      for (size_t b = 0; b < j.dim(); ++b) prods.push_back(multiply(pw.basis_vector(a), j.basis_vector(b)));
    pw = Subspace::span(F_, n, prods);
  }
  if (pw.dim() > 0) {
    radical_error_ = "radical unavailable: candidate radical is not nilpotent";
    return;
  }
  radical_ = std::move(j);
}

void Algebra::compute_generators() {
  generators_.clear();
  const size_t n = dim();
  const size_t nv = num_vertices();
  if (quiver_) {
    for (size_t a = 0; a < quiver_->arrows.size(); ++a) {
      generators_.push_back({unit_vector(n, nv + a), quiver_->arrows[a].source, quiver_->arrows[a].target});
    }
    return;
  }
  auto sandwich = [&](size_t s, const Vector& x, size_t t) {
    return multiply(multiply(idempotents_[s], x), idempotents_[t]);
  };
  if (radical_ && basic_) {
    const Subspace& rad = *radical_;
    std::vector<Vector> rad2_gens;
    for (size_t i = 0; i < rad.dim(); ++i)
      for (size_t j = 0; j < rad.dim(); ++j)
        rad2_gens.push_back(multiply(rad.basis_vector(i), rad.basis_vector(j)));
    Subspace rad2 = Subspace::span(F_, n, rad2_gens);
    for (size_t s = 0; s < nv; ++s)
      for (size_t t = 0; t < nv; ++t) {
        Subspace acc = rad2;
        for (size_t i = 0; i < rad.dim(); ++i) {
          Vector g = sandwich(s, rad.basis_vector(i), t);
          if (acc.contains(g)) continue;
          acc = acc.sum(Subspace::span(F_, n, {g}));
          generators_.push_back({g, s, t});
        }
      }
    return;
  }
  for (size_t s = 0; s < nv; ++s)
    for (size_t t = 0; t < nv; ++t)
      for (size_t i = 0; i < n; ++i) {
        Vector g = sandwich(s, unit_vector(n, i), t);
        if (is_zero(g)) continue;
        if (s == t && Subspace::span(F_, n, {idempotents_[s]}).contains(g)) continue;
        generators_.push_back({g, s, t});
      }
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  const size_t n = dim();
  Vector r(n);
  for (size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rational c = F_.mul(x[i], y[j]);
      axpy(F_, r, c, products_[i][j]);
    }
  }
  return r;
}

Matrix Algebra::right_mult_of(const Vector& a) const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) axpy(F_, m, a[i], right_mult_[i]);
  return m;
}

Matrix Algebra::left_mult_of(const Vector& a) const {
  Matrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) axpy(F_, m, a[i], left_mult_[i]);
  return m;
}

const Subspace& Algebra::radical() const {
  if (!radical_) throw HypothesisError(radical_error_);
  return *radical_;
}

void Algebra::require_basic() const {
  const Subspace& rad = radical();
  if (!basic_) {
    throw HypothesisError("algebra is not basic with primitive idempotents (dim A/rad = " +
                          std::to_string(dim() - rad.dim()) + ", idempotents = " +
                          std::to_string(num_vertices()) + ")");
  }
}

Algebra Algebra::opposite() const {
  Algebra op;
  op.F_ = F_;
  op.names_ = names_;
  op.unit_ = unit_;
  op.idempotents_ = idempotents_;
  const size_t n = dim();
  op.products_.assign(n, std::vector<Vector>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) op.products_[i][j] = products_[j][i];
  op.radical_ = radical_;
  op.radical_error_ = radical_error_;
  op.build_derived();
  if (quiver_) {
    // reverse arrows; the radical was carried over above
    op.generators_.clear();
    for (const auto& g : generators_) op.generators_.push_back({g.element, g.target, g.source});
  }
  return op;
}

// ---------------------------------------------------------------------------

Algebra path_algebra(const Field& F, const Quiver& q, size_t path_cap) {
  q.check_well_formed();
  const size_t nv = q.vertices.size();
  if (nv == 0) throw InputError("quiver has no vertices");
  auto contains_relation = [&](const std::vector<size_t>& p) {
    for (const auto& rel : q.relations) {
      if (rel.size() > p.size()) continue;
      for (size_t s = 0; s + rel.size() <= p.size(); ++s) {
        bool match = true;
        for (size_t t = 0; t < rel.size() && match; ++t) match = p[s + t] == rel[t];
        if (match) return true;
      }
    }
    return false;
  };
  // nontrivial paths by length, then lexicographically in arrow order
  std::vector<std::vector<size_t>> paths;
  std::vector<std::vector<size_t>> frontier;
  for (size_t a = 0; a < q.arrows.size(); ++a) frontier.push_back({a});
  while (!frontier.empty()) {
    std::vector<std::vector<size_t>> next;
    for (auto& p : frontier) {
      if (contains_relation(p)) continue;
      paths.push_back(p);
      if (paths.size() + nv > path_cap) {
        throw InputError("non-admissible presentation: more than " + std::to_string(path_cap) +
                         " paths avoid the relations");
      }
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[p.back()].target != q.arrows[a].source) continue;
        auto np = p;
        np.push_back(a);
        next.push_back(std::move(np));
      }
    }
    frontier = std::move(next);
  }
  const size_t n = nv + paths.size();
  std::map<std::vector<size_t>, size_t> index;
  for (size_t i = 0; i < paths.size(); ++i) index[paths[i]] = nv + i;

  Algebra::Spec spec;
  spec.field = F;
  for (const auto& v : q.vertices) spec.basis_names.push_back("e_" + v);
  for (const auto& p : paths) {
    std::string name;
    for (size_t t = 0; t < p.size(); ++t) name += (t ? "*" : "") + q.arrows[p[t]].name;
    spec.basis_names.push_back(name);
  }
  auto src = [&](size_t b) { return b < nv ? b : q.arrows[paths[b - nv].front()].source; };
  auto tgt = [&](size_t b) { return b < nv ? b : q.arrows[paths[b - nv].back()].target; };
  spec.products.assign(n, std::vector<Vector>(n, Vector(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (tgt(i) != src(j)) continue;
      if (i < nv) {
        spec.products[i][j][j] = F.from_int(1);
      } else if (j < nv) {
        spec.products[i][j][i] = F.from_int(1);
      } else {
        auto p = paths[i - nv];
        const auto& r = paths[j - nv];
        p.insert(p.end(), r.begin(), r.end());
        auto it = index.find(p);
        if (it != index.end()) spec.products[i][j][it->second] = F.from_int(1);
      }
    }
  spec.unit = Vector(n);
  for (size_t v = 0; v < nv; ++v) {
    spec.unit[v] = F.from_int(1);
    spec.idempotents.push_back(unit_vector(n, v));
  }
  spec.quiver = q;
  return Algebra(std::move(spec));
}

}  // namespace tcoh
