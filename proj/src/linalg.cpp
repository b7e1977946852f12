#include "tcoh/linalg.hpp"

#include <algorithm>

#include "tcoh/errors.hpp"

namespace tcoh {

Vector zero_vector(size_t n) { return Vector(n); }

Vector unit_vector(size_t n, size_t i) {
  Vector v(n);
  v[i] = Rational(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector add(const Field& F, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vector sub(const Field& F, const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vector scale(const Field& F, const Rational& c, const Vector& v) {
  Vector r(v.size());
  if (c.is_zero()) return r;
  for (size_t i = 0; i < v.size(); ++i) r[i] = F.mul(c, v[i]);
  return r;
}

void axpy(const Field& F, Vector& y, const Rational& c, const Vector& x) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < x.size(); ++i) F.axpy_into(y[i], c, x[i]);
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(const Field& F, size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = F.from_int(1);
  return m;
}

Matrix Matrix::from_rows(size_t cols, const std::vector<Vector>& rows) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vector Matrix::row(size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(size_t r, const Vector& v) {
  if (v.size() != cols_) throw InternalError("row length mismatch");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matrix product dimension mismatch");
  Matrix c(a.rows(), b.cols());
  // nonzero pattern of b's rows
  std::vector<SparseRow> brows(b.rows());
  for (size_t k = 0; k < b.rows(); ++k) brows[k] = SparseRow::from_dense(b.row_view(k));
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      const SparseRow& br = brows[k];
      for (size_t t = 0; t < br.idx.size(); ++t) F.axpy_into(c.at(i, br.idx[t]), aik, br.val[t]);
    }
  }
  return c;
}

Matrix add(const Field& F, const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) c.at(i, j) = F.add(a.at(i, j), b.at(i, j));
  return c;
}

Matrix scale(const Field& F, const Rational& s, const Matrix& m) {
  Matrix c(m.rows(), m.cols());
  if (s.is_zero()) return c;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) c.at(i, j) = F.mul(s, m.at(i, j));
    }
  return c;
}

void axpy(const Field& F, Matrix& y, const Rational& c, const Matrix& x) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) F.axpy_into(y.at(i, j), c, x.at(i, j));
}

Vector vec_mat(const Field& F, const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw InternalError("vector-matrix dimension mismatch");
  Vector r(m.cols());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto row = m.row_view(i);
    for (size_t j = 0; j < row.size(); ++j) F.axpy_into(r[j], v[i], row[j]);
  }
  return r;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Matrix vstack(size_t cols, const std::vector<Matrix>& parts) {
  size_t r = 0;
  for (const auto& p : parts) r += p.rows();
  Matrix m(r, cols);
  size_t ro = 0;
  for (const auto& p : parts) {
    for (size_t i = 0; i < p.rows(); ++i)
      for (size_t j = 0; j < cols; ++j) m.at(ro + i, j) = p.at(i, j);
    ro += p.rows();
  }
  return m;
}

// ---------------------------------------------------------------------------

SparseRow SparseRow::from_dense(std::span<const Rational> v) {
  SparseRow r;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      r.idx.push_back(static_cast<uint32_t>(i));
      r.val.push_back(v[i]);
    }
  }
  return r;
}

Vector SparseRow::to_dense(size_t n) const {
  Vector v(n);
  for (size_t t = 0; t < idx.size(); ++t) v[idx[t]] = val[t];
  return v;
}

const Rational* SparseRow::find(uint32_t col) const {
  auto it = std::lower_bound(idx.begin(), idx.end(), col);
  if (it == idx.end() || *it != col) return nullptr;
  return &val[static_cast<size_t>(it - idx.begin())];
}

void sparse_axpy(const Field& F, SparseRow& y, const Rational& c, const SparseRow& x) {
  if (c.is_zero() || x.empty()) return;
  SparseRow out;
  out.idx.reserve(y.size() + x.size());
  out.val.reserve(y.size() + x.size());
  size_t i = 0, j = 0;
  while (i < y.size() || j < x.size()) {
    if (j == x.size() || (i < y.size() && y.idx[i] < x.idx[j])) {
      out.idx.push_back(y.idx[i]);
      out.val.push_back(std::move(y.val[i]));
      ++i;
    } else if (i == y.size() || x.idx[j] < y.idx[i]) {
      out.idx.push_back(x.idx[j]);
      out.val.push_back(F.mul(c, x.val[j]));
      ++j;
    } else {
      Rational s = F.add(y.val[i], F.mul(c, x.val[j]));
      if (!s.is_zero()) {
        out.idx.push_back(y.idx[i]);
        out.val.push_back(std::move(s));
      }
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

// ---------------------------------------------------------------------------

Echelon::Echelon(const Field& F, size_t ncols) : F_(F), ncols_(ncols), pivot_row_(ncols, -1) {}

void Echelon::reduce_leading(SparseRow& v) const {
  while (!v.empty()) {
    int64_t r = pivot_row_[v.idx[0]];
    if (r < 0) return;
    Rational c = F_.neg(v.val[0]);
    sparse_axpy(F_, v, c, rows_[static_cast<size_t>(r)]);
  }
}

bool Echelon::insert(SparseRow v) {
  reduce_leading(v);
  if (v.empty()) return false;
  Rational inv = F_.inv(v.val[0]);
  if (!inv.is_one()) {
    for (auto& x : v.val) x = F_.mul(inv, x);
  }
  pivot_row_[v.idx[0]] = static_cast<int64_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseRow> Echelon::reduced_rows() const {
  std::vector<size_t> order(rows_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return rows_[a].idx[0] < rows_[b].idx[0]; });
  std::vector<SparseRow> out(order.size());
  std::vector<int64_t> pos(ncols_, -1);
  for (size_t k = 0; k < order.size(); ++k) pos[rows_[order[k]].idx[0]] = static_cast<int64_t>(k);
  // back substitution from the largest pivot down
  for (size_t kk = order.size(); kk-- > 0;) {
    SparseRow r = rows_[order[kk]];
    std::vector<std::pair<uint32_t, size_t>> hits;
    for (size_t t = 1; t < r.size(); ++t) {
      int64_t p = pos[r.idx[t]];
      if (p >= 0) hits.emplace_back(r.idx[t], static_cast<size_t>(p));
    }
    for (const auto& [col, k] : hits) {
      const Rational* c = r.find(col);
      if (c == nullptr) continue;
      Rational neg = F_.neg(*c);
      sparse_axpy(F_, r, neg, out[k]);
    }
    out[kk] = std::move(r);
  }
  return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::from_echelon(const Field& F, size_t ambient, const Echelon& e) {
  Subspace s(F, ambient);
  s.rows_ = e.reduced_rows();
  s.pivot_index_.assign(ambient, -1);
  for (size_t i = 0; i < s.rows_.size(); ++i) {
    s.pivots_.push_back(s.rows_[i].idx[0]);
    s.pivot_index_[s.rows_[i].idx[0]] = static_cast<int64_t>(i);
  }
  return s;
}

Subspace Subspace::span(const Field& F, size_t ambient, const std::vector<Vector>& gens) {
  Echelon e(F, ambient);
  for (const auto& g : gens) {
    if (g.size() != ambient) throw InternalError("span: vector length mismatch");
    e.insert(SparseRow::from_dense(g));
  }
  return from_echelon(F, ambient, e);
}

Subspace Subspace::row_space(const Field& F, const Matrix& m) {
  Echelon e(F, m.cols());
  for (size_t i = 0; i < m.rows(); ++i) e.insert(SparseRow::from_dense(m.row_view(i)));
  return from_echelon(F, m.cols(), e);
}

Subspace Subspace::full(const Field& F, size_t ambient) {
  return row_space(F, Matrix::identity(F, ambient));
}

std::vector<size_t> Subspace::free_columns() const {
  std::vector<size_t> out;
  for (size_t c = 0; c < ambient_; ++c) {
    if (pivot_index_.empty() || pivot_index_[c] < 0) out.push_back(c);
  }
  return out;
}

Matrix Subspace::basis() const {
  Matrix m(rows_.size(), ambient_);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t t = 0; t < rows_[i].size(); ++t) m.at(i, rows_[i].idx[t]) = rows_[i].val[t];
  return m;
}

SparseRow Subspace::reduce(SparseRow v) const {
  if (rows_.empty()) return v;
  std::vector<std::pair<uint32_t, size_t>> hits;
  for (size_t t = 0; t < v.size(); ++t) {
    int64_t r = pivot_index_[v.idx[t]];
    if (r >= 0) hits.emplace_back(v.idx[t], static_cast<size_t>(r));
  }
  // RREF rows vanish on the other pivots, so one pass suffices.
  for (const auto& [col, r] : hits) {
    const Rational* c = v.find(col);
    if (c == nullptr) continue;
    Rational neg = F_.neg(*c);
    sparse_axpy(F_, v, neg, rows_[r]);
  }
  return v;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("reduce: dimension mismatch");
  return reduce(SparseRow::from_dense(v)).to_dense(ambient_);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("contains: dimension mismatch");
  return reduce(SparseRow::from_dense(v)).empty();
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector c(rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vector Subspace::quotient_coords(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("quotient_coords: dimension mismatch");
  SparseRow r = reduce(SparseRow::from_dense(v));
  Vector dense = r.to_dense(ambient_);
  Vector out;
  out.reserve(ambient_ - rows_.size());
  for (size_t c = 0; c < ambient_; ++c) {
    if (pivot_index_.empty() || pivot_index_[c] < 0) out.push_back(std::move(dense[c]));
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Echelon e(F_, ambient_);
  for (const auto& r : rows_) e.insert(r);
  for (const auto& r : other.rows_) e.insert(r);
  return from_echelon(F_, ambient_, e);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& r : rows_) {
    if (!other.reduce(r).empty()) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.rows_.size() != b.rows_.size()) return false;
  for (size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].idx != b.rows_[i].idx || a.rows_[i].val != b.rows_[i].val) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Subspace kernel_basis(const Field& F, const Matrix& m) {
  Echelon e(F, m.cols());
  for (size_t i = 0; i < m.rows(); ++i) e.insert(SparseRow::from_dense(m.row_view(i)));
  auto rr = e.reduced_rows();
  std::vector<int64_t> pivot_of(m.cols(), -1);
  for (size_t i = 0; i < rr.size(); ++i) pivot_of[rr[i].idx[0]] = static_cast<int64_t>(i);
  // For each free column f: v_f = e_f - sum_r rr[r][f] e_{pivot(r)}
  std::vector<Vector> gens;
  std::vector<std::vector<std::pair<size_t, Rational>>> col_entries(m.cols());
  for (size_t i = 0; i < rr.size(); ++i)
    for (size_t t = 1; t < rr[i].size(); ++t) col_entries[rr[i].idx[t]].emplace_back(i, rr[i].val[t]);
  for (size_t f = 0; f < m.cols(); ++f) {
    if (pivot_of[f] >= 0) continue;
    Vector v(m.cols());
    v[f] = F.from_int(1);
    for (const auto& [r, c] : col_entries[f]) v[rr[r].idx[0]] = F.neg(c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(F, m.cols(), gens);
}

Subspace left_kernel(const Field& F, const Matrix& m) { return kernel_basis(F, m.transpose()); }

size_t rank(const Field& F, const Matrix& m) {
  Echelon e(F, m.cols());
  for (size_t i = 0; i < m.rows(); ++i) e.insert(SparseRow::from_dense(m.row_view(i)));
  return e.rank();
}

LeftSolver::LeftSolver(const Field& F, const Matrix& m) : F_(F), n_(m.rows()), eqs_(m.cols()) {
  // equation j: sum_i x_i m[i][j] = b_j ; augmented with identity to track b.
  Echelon e(F, n_ + eqs_);
  for (size_t j = 0; j < eqs_; ++j) {
    SparseRow r;
    for (size_t i = 0; i < n_; ++i) {
      if (!m.at(i, j).is_zero()) {
        r.idx.push_back(static_cast<uint32_t>(i));
        r.val.push_back(m.at(i, j));
      }
    }
    r.idx.push_back(static_cast<uint32_t>(n_ + j));
    r.val.push_back(F.from_int(1));
    e.insert(std::move(r));
  }
  rref_ = e.reduced_rows();
  for (const auto& r : rref_) {
    if (r.idx[0] < n_) ++rank_;
  }
}

std::optional<Vector> LeftSolver::solve(const Vector& b) const {
  if (b.size() != eqs_) throw InternalError("solve: right-hand side length mismatch");
  Vector x(n_);
  for (const auto& r : rref_) {
    Rational rhs;
    for (size_t t = 0; t < r.size(); ++t) {
      if (r.idx[t] >= n_) F_.axpy_into(rhs, r.val[t], b[r.idx[t] - n_]);
    }
    if (r.idx[0] >= n_) {
      if (!rhs.is_zero()) return std::nullopt;
    } else {
      x[r.idx[0]] = rhs;
    }
  }
  return x;
}

std::optional<Vector> solve_left(const Field& F, const Matrix& m, const Vector& b) {
  return LeftSolver(F, m).solve(b);
}

}  // namespace tcoh
