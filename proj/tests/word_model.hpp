#pragma once

// Word-basis model of A<X_1..X_r> and of T_A(A (x)_k A), built directly from
// the structure constants of A. Used as an oracle for degree slices: the
// library's tower is a chain of quotients, the model is plain concatenation.

#include <memory>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "tcoh/graded.hpp"

namespace oracle {

class WordModel {
 public:
  enum class Kind { Free, Bar };

  WordModel(tcoh::AlgebraPtr alg, Kind kind, size_t r = 1) : alg_(std::move(alg)), kind_(kind), r_(r) {}

  size_t n() const { return alg_->dim(); }

  size_t dim(size_t s) const {
    size_t d = kind_ == Kind::Free ? n() : n() * n();
    size_t base = kind_ == Kind::Free ? r_ : n();
    for (size_t i = 0; i < s; ++i) d *= base;
    return kind_ == Kind::Free ? d : (s == 0 ? n() : d / n());
  }

  // Product of basis element i in degree c with basis element j in degree b.
  tcoh::Vector mult_basis(size_t c, size_t i, size_t b, size_t j) const {
    const tcoh::Field& F = alg_->field();
    tcoh::Vector out(dim(b + c));
    if (kind_ == Kind::Free) {
      size_t wc = pow(r_, c), wb = pow(r_, b);
      size_t z1 = i / wc, w1 = i % wc, z2 = j / wb, w2 = j % wb;
      const tcoh::Vector& p = alg_->product(z1, z2);
      size_t w = w1 * wb + w2;
      size_t wt = pow(r_, b + c);
      for (size_t z = 0; z < n(); ++z)
        if (!p[z].is_zero()) out[z * wt + w] = F.add(out[z * wt + w], p[z]);
      return out;
    }
    auto d1 = digits(i, c + 1), d2 = digits(j, b + 1);
    const tcoh::Vector& p = alg_->product(d1.back(), d2.front());
    for (size_t z = 0; z < n(); ++z) {
      if (p[z].is_zero()) continue;
      std::vector<size_t> d(d1.begin(), d1.end() - 1);
      d.push_back(z);
      d.insert(d.end(), d2.begin() + 1, d2.end());
      size_t idx = number(d);
      out[idx] = F.add(out[idx], p[z]);
    }
    return out;
  }

  tcoh::Vector mult(size_t c, const tcoh::Vector& x, size_t b, const tcoh::Vector& y) const {
    const tcoh::Field& F = alg_->field();
    tcoh::Vector out(dim(b + c));
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        tcoh::axpy(F, out, F.mul(x[i], y[j]), mult_basis(c, i, b, j));
      }
    }
    return out;
  }

  // Image of basis element i of degree s in the library tower.
  tcoh::Vector to_tower(const tcoh::TensorTower& t, size_t s, size_t i) const {
    const tcoh::Field& F = alg_->field();
    const tcoh::Vector& unit = alg_->unit();
    if (kind_ == Kind::Free) {
      size_t ws = pow(r_, s);
      size_t z = i / ws, w = i % ws;
      tcoh::Vector x = tcoh::unit_vector(n(), z);
      auto letters = digits_base(w, s, r_);
      for (size_t k = 0; k < s; ++k) {
        tcoh::Vector xl(r_ * n());
        for (size_t q = 0; q < n(); ++q) xl[letters[k] * n() + q] = unit[q];
        x = t.mult(k, x, 1, xl);
      }
      return x;
    }
    auto d = digits(i, s + 1);
    if (s == 0) return tcoh::unit_vector(n(), d[0]);
    tcoh::Vector x = tcoh::unit_vector(n() * n(), d[0] * n() + d[1]);
    for (size_t k = 2; k <= s; ++k) {
      tcoh::Vector y(n() * n());
      for (size_t q = 0; q < n(); ++q) y[q * n() + d[k]] = F.add(y[q * n() + d[k]], unit[q]);
      x = t.mult(k - 1, x, 1, y);
    }
    return x;
  }

  tcoh::Vector to_tower(const tcoh::TensorTower& t, size_t s, const tcoh::Vector& v) const {
    const tcoh::Field& F = alg_->field();
    tcoh::Vector out(t.power(s).dim());
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) tcoh::axpy(F, out, v[i], to_tower(t, s, i));
    return out;
  }

 private:
  static size_t pow(size_t b, size_t e) {
    size_t r = 1;
    for (size_t i = 0; i < e; ++i) r *= b;
    return r;
  }
  static std::vector<size_t> digits_base(size_t x, size_t len, size_t base) {
    std::vector<size_t> d(len);
    for (size_t k = len; k-- > 0;) {
      d[k] = x % base;
      x /= base;
    }
    return d;
  }
  std::vector<size_t> digits(size_t x, size_t len) const { return digits_base(x, len, n()); }
  size_t number(const std::vector<size_t>& d) const {
    size_t x = 0;
    for (size_t v : d) x = x * n() + v;
    return x;
  }

  tcoh::AlgebraPtr alg_;
  Kind kind_;
  size_t r_;
};

// A graded map between free modules in word coordinates.
struct WordMap {
  std::vector<size_t> source_degrees, target_degrees;
  struct Entry {
    size_t target, source;
    tcoh::Vector value;  // word coordinates in degree d_i - d_j
  };
  std::vector<Entry> entries;
};

inline WordMap random_word_map(const WordModel& w, std::mt19937_64& rng, size_t max_degree, size_t max_gens,
                               size_t cap) {
  WordMap m;
  auto degrees = [&] {
    std::vector<size_t> d(1 + rng() % max_gens);
    for (auto& x : d) x = rng() % (max_degree + 1);
    return d;
  };
  m.source_degrees = degrees();
  m.target_degrees = degrees();
  for (size_t j = 0; j < m.target_degrees.size(); ++j)
    for (size_t i = 0; i < m.source_degrees.size(); ++i) {
      if (m.source_degrees[i] < m.target_degrees[j]) continue;
      size_t c = m.source_degrees[i] - m.target_degrees[j];
      if (c > cap) continue;
      tcoh::Vector v(w.dim(c));
      bool any = false;
      for (auto& x : v) {
        int64_t r = rng() % 4 == 0 ? static_cast<int64_t>(rng() % 5) - 2 : 0;
        x = tcoh::Rational(r);
        any = any || r != 0;
      }
      if (any) m.entries.push_back({j, i, std::move(v)});
    }
  return m;
}

// Brute-force kernel dimension of the degree-s slice in word coordinates.
inline size_t word_kernel_dim(const tcoh::Field& F, const WordModel& w, const WordMap& m, size_t s) {
  std::vector<size_t> soff, toff;
  size_t srows = 0, tcols = 0;
  for (size_t d : m.source_degrees) {
    soff.push_back(srows);
    srows += d <= s ? w.dim(s - d) : 0;
  }
  for (size_t d : m.target_degrees) {
    toff.push_back(tcols);
    tcols += d <= s ? w.dim(s - d) : 0;
  }
  std::vector<tcoh::Vector> rows(srows, tcoh::Vector(tcols));
  for (const auto& e : m.entries) {
    size_t di = m.source_degrees[e.source], dj = m.target_degrees[e.target];
    if (s < di) continue;
    size_t c = di - dj, b = s - di;
    for (size_t y = 0; y < w.dim(b); ++y) {
      tcoh::Vector img = w.mult(c, e.value, b, tcoh::unit_vector(w.dim(b), y));
      for (size_t q = 0; q < img.size(); ++q)
        rows[soff[e.source] + y][toff[e.target] + q] = F.add(rows[soff[e.source] + y][toff[e.target] + q], img[q]);
    }
  }
  return srows - rank_rows(F, rows, tcols);
}

inline tcoh::GradedMap to_library_map(const WordModel& w, std::shared_ptr<const tcoh::TensorTower> t,
                                      const WordMap& m) {
  tcoh::GradedMap f{tcoh::GradedProjective::free(t, m.source_degrees), tcoh::GradedProjective::free(t, m.target_degrees),
                    {}};
  for (const auto& e : m.entries) {
    size_t c = m.source_degrees[e.source] - m.target_degrees[e.target];
    f.entries.push_back({e.target, e.source, w.to_tower(*t, c, e.value)});
  }
  return f;
}

}  // namespace oracle
