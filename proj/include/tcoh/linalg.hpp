#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tcoh/field.hpp"

namespace tcoh {

using Vector = std::vector<Rational>;

Vector zero_vector(size_t n);
Vector unit_vector(size_t n, size_t i);
bool is_zero(const Vector& v);
Vector add(const Field& F, const Vector& a, const Vector& b);
Vector sub(const Field& F, const Vector& a, const Vector& b);
Vector scale(const Field& F, const Rational& c, const Vector& v);
void axpy(const Field& F, Vector& y, const Rational& c, const Vector& x);
Vector concat(const Vector& a, const Vector& b);

// Dense row-major matrix of exact scalars. Vectors are rows; a matrix acts
// on the right, v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field& F, size_t n);
  static Matrix from_rows(size_t cols, const std::vector<Vector>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Vector row(size_t r) const;
  void set_row(size_t r, const Vector& v);
  std::span<const Rational> row_view(size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_zero() const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b);
Matrix add(const Field& F, const Matrix& a, const Matrix& b);
Matrix scale(const Field& F, const Rational& c, const Matrix& m);
void axpy(const Field& F, Matrix& y, const Rational& c, const Matrix& x);
Vector vec_mat(const Field& F, const Vector& v, const Matrix& m);
Matrix block_diagonal(const std::vector<Matrix>& blocks);
// Vertical stacking; all inputs share the column count.
Matrix vstack(size_t cols, const std::vector<Matrix>& parts);

// Sparse row used by elimination.
struct SparseRow {
  std::vector<uint32_t> idx;
  std::vector<Rational> val;

  bool empty() const { return idx.empty(); }
  size_t size() const { return idx.size(); }
  static SparseRow from_dense(std::span<const Rational> v);
  Vector to_dense(size_t n) const;
  const Rational* find(uint32_t col) const;
};

// y += c * x
void sparse_axpy(const Field& F, SparseRow& y, const Rational& c, const SparseRow& x);

// Incremental echelon basis. Rows are normalized to leading coefficient one;
// full reduction to RREF happens in reduced_rows().
class Echelon {
 public:
  Echelon(const Field& F, size_t ncols);

  // Returns true when v is independent of the rows seen so far.
  bool insert(SparseRow v);
  size_t rank() const { return rows_.size(); }
  size_t ncols() const { return ncols_; }
  // Rows of the reduced row echelon form, ordered by ascending pivot.
  std::vector<SparseRow> reduced_rows() const;

 private:
  void reduce_leading(SparseRow& v) const;

  Field F_;
  size_t ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int64_t> pivot_row_;  // column -> row index, -1 when absent
};

// A subspace of F^n stored as its unique RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& F, size_t ambient) : F_(F), ambient_(ambient) {}

  static Subspace span(const Field& F, size_t ambient, const std::vector<Vector>& gens);
  static Subspace row_space(const Field& F, const Matrix& m);
  static Subspace full(const Field& F, size_t ambient);

  const Field& field() const { return F_; }
  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<size_t>& pivots() const { return pivots_; }
  std::vector<size_t> free_columns() const;

  Matrix basis() const;
  Vector basis_vector(size_t i) const { return rows_[i].to_dense(ambient_); }
  const SparseRow& sparse_row(size_t i) const { return rows_[i]; }

  // Remainder of v modulo the subspace; zero at every pivot column.
  Vector reduce(const Vector& v) const;
  SparseRow reduce(SparseRow v) const;
  bool contains(const Vector& v) const;
  // Coordinates of v (assumed to lie in the subspace) in the RREF basis.
  Vector coordinates(const Vector& v) const;
  // Coordinates of v + sub in the canonical complement spanned by the
  // non-pivot columns.
  Vector quotient_coords(const Vector& v) const;

  Subspace sum(const Subspace& other) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  static Subspace from_echelon(const Field& F, size_t ambient, const Echelon& e);

  Field F_;
  size_t ambient_ = 0;
  std::vector<SparseRow> rows_;
  std::vector<size_t> pivots_;
  std::vector<int64_t> pivot_index_;  // column -> row index, -1 when absent
};

// Right null space {v : m v^T = 0}, i.e. vectors v with sum_j m[i][j] v[j] = 0.
Subspace kernel_basis(const Field& F, const Matrix& m);
// Left null space {v : v * m = 0}.
Subspace left_kernel(const Field& F, const Matrix& m);
size_t rank(const Field& F, const Matrix& m);
// Canonical solution x of x * m = b (free variables zero), if one exists.
std::optional<Vector> solve_left(const Field& F, const Matrix& m, const Vector& b);

// Solves x * m = b for many right-hand sides sharing one factorization.
class LeftSolver {
 public:
  LeftSolver(const Field& F, const Matrix& m);
  std::optional<Vector> solve(const Vector& b) const;
  size_t rank() const { return rank_; }

 private:
  Field F_;
  size_t n_ = 0;  // number of unknowns = rows of m
  size_t rank_ = 0;
  // RREF of [m^T | I_cols]; rows with pivot inside the first n columns give
  // the solution recipe.
  std::vector<SparseRow> rref_;
  size_t eqs_ = 0;
};

}  // namespace tcoh
