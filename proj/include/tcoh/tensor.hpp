#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "tcoh/homology.hpp"
#include "tcoh/module.hpp"

namespace tcoh {

// M (x)_A N, computed from a projective presentation of M: the quotient of
// the sum of e_v N over the generators of M by the images of the relations.
class TensorProduct {
 public:
  TensorProduct(const RightModule& m, const Bimodule& n);
  // When m is a bimodule the result keeps its left action.
  TensorProduct(const Bimodule& m, const Bimodule& n);

  size_t dim() const { return free_.size(); }
  const RightModule& left_factor() const { return m_; }
  const Bimodule& right_factor() const { return n_; }

  // Right action inherited from N.
  const RightModule& module() const { return *result_; }
  // Only when constructed from a bimodule.
  const Bimodule& bimodule() const;
  bool has_left_action() const { return result_bimodule_.has_value(); }

  // Class of x (x) t.
  Vector class_of(const Vector& x, const Vector& t) const;
  // t -> class of e_k (x) t, a dim N x dim matrix.
  const Matrix& xi(size_t k) const;

  // Basis element i is the class of representative(i).first (x) representative(i).second.
  std::pair<Vector, Vector> representative(size_t i) const;

  // F (x) id for F : M -> M' and id (x) G for G : N -> N'.
  Matrix map_left(const Matrix& f, const TensorProduct& target) const;
  Matrix map_right(const Matrix& g, const TensorProduct& target) const;

 private:
  void build();
  Vector reduce_ambient(const Vector& w) const;

  RightModule m_;
  Bimodule n_;
  std::optional<Bimodule> m_bimodule_;
  Presentation pres_;
  std::vector<size_t> offsets_;
  size_t ambient_ = 0;
  Subspace relations_;
  std::vector<size_t> free_;
  std::vector<size_t> block_of_;
  Matrix quotient_;  // ambient -> quotient coordinates
  std::shared_ptr<RightModule> result_;
  std::optional<Bimodule> result_bimodule_;

  struct Cache {
    explicit Cache(size_t n) : flags(n), xi(n) {}
    std::vector<std::once_flag> flags;
    std::vector<Matrix> xi;
  };
  std::shared_ptr<Cache> cache_;
};

RightModule tensor_over(const RightModule& m, const Bimodule& s);
Bimodule tensor_over(const Bimodule& m, const Bimodule& s);

// Hom_A(S, Y). Elements are stored as the images of the generators of a
// presentation of S. When S is a bimodule the space is a right module via
// (f.a)(t) = f(a t).
class HomSpace {
 public:
  HomSpace(const RightModule& s, const RightModule& y);
  HomSpace(const Bimodule& s, const RightModule& y);

  size_t dim() const { return space_.dim(); }
  // Only when the source is a bimodule.
  const RightModule& module() const;
  const RightModule& source() const { return s_; }
  const RightModule& target() const { return y_; }

  // Matrix (dim S x dim Y) of the map with coordinates h.
  Matrix to_matrix(const Vector& h) const;
  // Coordinates of a module map given by its matrix.
  Vector from_matrix(const Matrix& phi) const;

 private:
  void build();

  RightModule s_;
  std::vector<Matrix> s_left_;
  RightModule y_;
  Presentation pres_;
  std::vector<size_t> offsets_;
  size_t ambient_ = 0;
  Subspace space_;
  std::shared_ptr<RightModule> result_;
};

RightModule hom_over(const Bimodule& s, const RightModule& y);

// M -> Hom(S, M (x) S), x -> (t -> x (x) t).
Matrix adjunction_unit(const TensorProduct& mt, const HomSpace& h);

// The bijection Hom(M (x) S, N) -> Hom(M, Hom(S, N)) in the bases of lhs and
// rhs, where inner = Hom(S, N) and rhs = Hom(M, inner.module()).
Matrix adjunction_matrix(const TensorProduct& mt, const HomSpace& lhs, const HomSpace& inner, const HomSpace& rhs);

}  // namespace tcoh
