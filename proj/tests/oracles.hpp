#pragma once

// Independent reference computations. These deliberately avoid the library's
// elimination code: ranks are computed by plain dense Gaussian elimination on
// GMP rationals or machine integers mod p.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "tcoh/field.hpp"
#include "tcoh/linalg.hpp"
#include "tcoh/module.hpp"

namespace oracle {

inline size_t rank_q(std::vector<std::vector<mpq_class>> a) {
  size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline size_t rank_p(std::vector<std::vector<int64_t>> a, int64_t p) {
  auto inv = [p](int64_t x) {
    int64_t r = 1, b = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = static_cast<int64_t>((__int128)r * b % p);
      b = static_cast<int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t q = r;
    while (q < rows && a[q][c] % p == 0) ++q;
    if (q == rows) continue;
    std::swap(a[q], a[r]);
    int64_t iv = inv(((a[r][c] % p) + p) % p);
    for (size_t i = r + 1; i < rows; ++i) {
      int64_t f = static_cast<int64_t>((__int128)(((a[i][c] % p) + p) % p) * iv % p);
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - static_cast<int64_t>((__int128)f * a[r][j] % p)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Rows given as vectors of library scalars.
inline size_t rank_rows(const tcoh::Field& F, const std::vector<tcoh::Vector>& rows, size_t cols) {
  if (F.is_prime()) {
    std::vector<std::vector<int64_t>> a;
    for (const auto& r : rows) {
      std::vector<int64_t> x;
      for (const auto& e : r) x.push_back(e.small_num());
      a.push_back(std::move(x));
    }
    return rank_p(std::move(a), static_cast<int64_t>(F.characteristic()));
  }
  std::vector<std::vector<mpq_class>> a;
  for (const auto& r : rows) {
    std::vector<mpq_class> x;
    for (const auto& e : r) x.push_back(e.to_mpq());
    a.push_back(std::move(x));
  }
  (void)cols;
  return rank_q(std::move(a));
}

inline size_t dense_rank(const tcoh::Field& F, const tcoh::Matrix& m) {
  std::vector<tcoh::Vector> rows;
  for (size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rank_rows(F, rows, m.cols());
}

// dim M (x)_A N as the quotient of M (x)_k N by x a (x) t - x (x) a t.
inline size_t tensor_dim(const tcoh::RightModule& m, const tcoh::Bimodule& n) {
  const tcoh::Field& F = m.field();
  size_t dm = m.dim(), dn = n.dim();
  std::vector<tcoh::Vector> rows;
  for (size_t b = 0; b < m.algebra()->dim(); ++b)
    for (size_t i = 0; i < dm; ++i)
      for (size_t t = 0; t < dn; ++t) {
        tcoh::Vector r(dm * dn);
        for (size_t k = 0; k < dm; ++k) r[k * dn + t] = F.add(r[k * dn + t], m.action(b).at(i, k));
        for (size_t u = 0; u < dn; ++u) r[i * dn + u] = F.sub(r[i * dn + u], n.left_action(b).at(t, u));
        rows.push_back(std::move(r));
      }
  return dm * dn - rank_rows(F, rows, dm * dn);
}

// dim Hom_A(S, Y) from the commuting conditions rho_S(b) Phi = Phi rho_Y(b).
inline size_t hom_dim(const tcoh::RightModule& s, const tcoh::RightModule& y) {
  const tcoh::Field& F = s.field();
  size_t ds = s.dim(), dy = y.dim();
  std::vector<tcoh::Vector> cols_as_rows;  // one equation per row
  for (size_t b = 0; b < s.algebra()->dim(); ++b)
    for (size_t i = 0; i < ds; ++i)
      for (size_t j = 0; j < dy; ++j) {
        tcoh::Vector eq(ds * dy);
        for (size_t k = 0; k < ds; ++k) eq[k * dy + j] = F.add(eq[k * dy + j], s.action(b).at(i, k));
        for (size_t k = 0; k < dy; ++k) eq[i * dy + k] = F.sub(eq[i * dy + k], y.action(b).at(k, j));
        cols_as_rows.push_back(std::move(eq));
      }
  return ds * dy - rank_rows(F, cols_as_rows, ds * dy);
}

}  // namespace oracle
