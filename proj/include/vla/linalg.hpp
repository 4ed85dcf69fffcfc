#ifndef VLA_LINALG_HPP
#define VLA_LINALG_HPP

#include <optional>
#include <vector>

#include "vla/matrix.hpp"

namespace vla {

/// Reduced row echelon form, in place.  Returns the rank; pivot column
/// indices are appended to `pivot_cols` when given.
std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank(Matrix m);

/// Basis of the right null space {x : m x = 0}, one vector per free column,
/// in the canonical RREF parametrization (deterministic).
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Characteristic polynomial det(tI - m) by the Faddeev-LeVerrier recursion.
/// Returned as coefficients c[0..n] with c[n] = 1, p(t) = sum c[i] t^i.
std::vector<Rational> char_poly(const Matrix& m);

/// prod_{i=0}^{n-1} (t - (n-1-2i)): the characteristic polynomial of the
/// weight operator of the n-dimensional irreducible sl2 module.
std::vector<Rational> sl2_weight_poly(std::size_t n);

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& t);

}  // namespace vla

#endif
