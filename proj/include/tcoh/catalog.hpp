#pragma once

#include "tcoh/algebra.hpp"

namespace tcoh {

// Small algebras used by the tests, the acceptance suite and the CLI.
AlgebraPtr field_algebra(const Field& F);
// k x ... x k with r factors.
AlgebraPtr semisimple_algebra(const Field& F, size_t r);
// k[x]/(x^2)
AlgebraPtr dual_numbers(const Field& F);
// Linearly oriented A_n: 1 -> 2 -> ... -> n, optionally with all length-2
// zero relations.
AlgebraPtr linear_quiver(const Field& F, size_t n, bool radical_square_zero = false);
// 1 => 2 with arrows a, b.
AlgebraPtr kronecker(const Field& F);
// Beilinson algebra of P^2: three vertices, arrows x0 x1 x2 : 1 -> 2 and
// y0 y1 y2 : 2 -> 3 with x_i y_j = x_j y_i. Given by structure constants.
AlgebraPtr beilinson_p2(const Field& F);

}  // namespace tcoh
