#include "tcoh/catalog.hpp"

#include <string>

namespace tcoh {

namespace {

AlgebraPtr from_quiver(const Field& F, Quiver q) {
  return std::make_shared<const Algebra>(path_algebra(F, q));
}

}  // namespace

AlgebraPtr field_algebra(const Field& F) { return semisimple_algebra(F, 1); }

AlgebraPtr semisimple_algebra(const Field& F, size_t r) {
  Quiver q;
  for (size_t i = 0; i < r; ++i) q.vertices.push_back(std::to_string(i + 1));
  return from_quiver(F, q);
}

AlgebraPtr dual_numbers(const Field& F) {
  Quiver q;
  q.vertices = {"1"};
  q.arrows = {{"x", 0, 0}};
  q.relations = {{0, 0}};
  return from_quiver(F, q);
}

AlgebraPtr linear_quiver(const Field& F, size_t n, bool radical_square_zero) {
  Quiver q;
  for (size_t i = 0; i < n; ++i) q.vertices.push_back(std::to_string(i + 1));
  for (size_t i = 0; i + 1 < n; ++i) q.arrows.push_back({std::string(1, static_cast<char>('a' + i)), i, i + 1});
  if (radical_square_zero) {
    for (size_t i = 0; i + 2 < n; ++i) q.relations.push_back({i, i + 1});
  }
  return from_quiver(F, q);
}

AlgebraPtr kronecker(const Field& F) {
  Quiver q;
  q.vertices = {"1", "2"};
  q.arrows = {{"a", 0, 1}, {"b", 0, 1}};
  return from_quiver(F, q);
}

AlgebraPtr beilinson_p2(const Field& F) {
  // basis: e1 e2 e3, x0 x1 x2, y0 y1 y2, p00 p01 p02 p11 p12 p22
  const size_t n = 15;
  Algebra::Spec s{F, {}, {}, {}, {}, std::nullopt};
  s.basis_names = {"e1", "e2", "e3", "x0", "x1", "x2", "y0", "y1", "y2"};
  size_t pidx[3][3];
  size_t next = 9;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j) {
      pidx[i][j] = pidx[j][i] = next++;
      s.basis_names.push_back("p" + std::to_string(i) + std::to_string(j));
    }
  auto e = [&](size_t i) { return unit_vector(n, i); };
  s.unit = add(F, add(F, e(0), e(1)), e(2));
  s.idempotents = {e(0), e(1), e(2)};
  // vertex of each basis element on either side
  std::vector<size_t> src(n), tgt(n);
  for (size_t v = 0; v < 3; ++v) src[v] = tgt[v] = v;
  for (size_t i = 0; i < 3; ++i) {
    src[3 + i] = 0, tgt[3 + i] = 1;
    src[6 + i] = 1, tgt[6 + i] = 2;
  }
  for (size_t k = 9; k < n; ++k) src[k] = 0, tgt[k] = 2;
  s.products.assign(n, std::vector<Vector>(n, zero_vector(n)));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (tgt[a] != src[b]) continue;
      if (a < 3) {
        s.products[a][b] = e(b);
      } else if (b < 3) {
        s.products[a][b] = e(a);
      } else if (a >= 3 && a < 6 && b >= 6 && b < 9) {
        s.products[a][b] = e(pidx[a - 3][b - 6]);
      }
    }
  return std::make_shared<const Algebra>(std::move(s));
}

}  // namespace tcoh
