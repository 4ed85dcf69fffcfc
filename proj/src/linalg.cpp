#include "vla/linalg.hpp"

#include "vla/errors.hpp"

namespace vla {

std::size_t rref_in_place(Matrix& m, std::vector<std::size_t>* pivot_cols) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    Rational inv = 1 / m(rank, col);
    for (std::size_t j = col; j < cols; ++j) m(rank, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::size_t rank(Matrix m) { return rref_in_place(m); }

std::vector<std::vector<Rational>> nullspace(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  rref_in_place(m, &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  // invertible iff the pivots of [m | I] all land in the left block
  std::vector<std::size_t> pivots;
  rref_in_place(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<Rational> char_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("char_poly of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix b = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational ck = -b.trace() / Rational(static_cast<long>(k));
    c[n - k] = ck;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) b(i, i) += ck;
      b = m * b;
    }
  }
  return c;
}

std::vector<Rational> sl2_weight_poly(std::size_t n) {
  std::vector<Rational> p{1};
  for (std::size_t i = 0; i < n; ++i) {
    // multiply by (t - (n-1-2i))
    Rational root(static_cast<long>(n) - 1 - 2 * static_cast<long>(i));
    std::vector<Rational> q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j];
      q[j] -= root * p[j];
    }
    p = std::move(q);
  }
  return p;
}

Rational eval_poly(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return acc;
}

}  // namespace vla
