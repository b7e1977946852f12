#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tcoh/field.hpp"
#include "tcoh/linalg.hpp"

namespace tcoh {

struct QuiverArrow {
  std::string name;
  size_t source = 0;
  size_t target = 0;
};

// Quiver with monomial relations. Paths compose left to right: p*q is "p
// then q" and is nonzero only when target(p) = source(q).
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<size_t>> relations;  // arrow indices

  void check_well_formed() const;
};

// Finite-dimensional algebra given by structure constants on a basis, with a
// complete set of orthogonal idempotents.
class Algebra {
 public:
  struct Spec {
    Field field;
    std::vector<std::string> basis_names;
    Vector unit;
    std::vector<Vector> idempotents;
    // products[i][j] = coordinates of b_i * b_j
    std::vector<std::vector<Vector>> products;
    std::optional<Quiver> quiver;
  };

  // Validates all algebra axioms; throws InputError on failure.
  explicit Algebra(Spec spec);

  const Field& field() const { return F_; }
  size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::optional<Quiver>& quiver() const { return quiver_; }

  const Vector& product(size_t i, size_t j) const { return products_[i][j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  // x -> x * b_i and x -> b_i * x, as right-acting matrices.
  const Matrix& right_mult(size_t i) const { return right_mult_[i]; }
  const Matrix& left_mult(size_t i) const { return left_mult_[i]; }
  Matrix right_mult_of(const Vector& a) const;
  Matrix left_mult_of(const Vector& a) const;
  Vector basis_element(size_t i) const { return unit_vector(dim(), i); }

  const Vector& unit() const { return unit_; }
  size_t num_vertices() const { return idempotents_.size(); }
  const Vector& idempotent(size_t v) const { return idempotents_[v]; }

  bool radical_available() const { return radical_.has_value(); }
  // Throws HypothesisError when the radical cannot be computed.
  const Subspace& radical() const;
  // dim A/rad equals the number of idempotents: the idempotents are primitive
  // and A is basic and split.
  bool is_basic() const { return basic_; }
  void require_basic() const;

  // Elements g = e_s g e_t which, together with the idempotents, generate A.
  struct Generator {
    Vector element;
    size_t source;
    size_t target;
  };
  const std::vector<Generator>& generators() const { return generators_; }

  // e_v A as a subspace of A (the indecomposable projective right module).
  const Subspace& projective_space(size_t v) const { return projective_[v]; }
  // Coordinates of e_v inside the basis of e_v A.
  const Vector& projective_top(size_t v) const { return projective_top_[v]; }

  Algebra opposite() const;

 private:
  Algebra() = default;
  void build_derived();
  void compute_radical();
  void compute_radical_prime();
  void compute_generators();

  Field F_;
  std::vector<std::string> names_;
  Vector unit_;
  std::vector<Vector> idempotents_;
  std::vector<std::vector<Vector>> products_;
  std::optional<Quiver> quiver_;
  std::vector<Matrix> right_mult_;
  std::vector<Matrix> left_mult_;
  std::optional<Subspace> radical_;
  std::string radical_error_;
  bool basic_ = false;
  std::vector<Generator> generators_;
  std::vector<Subspace> projective_;
  std::vector<Vector> projective_top_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Paths avoiding every relation, multiplication by concatenation.
Algebra path_algebra(const Field& F, const Quiver& q, size_t path_cap = 4096);

// Result of a bounded global dimension search.
struct GlobalDimension {
  bool finite = false;
  size_t value = 0;  // exact value when finite, else the lower bound bound+1
};

}  // namespace tcoh
