#ifndef VLA_MATRIX_HPP
#define VLA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "vla/rational.hpp"

namespace vla {

/// Dense matrix over the exact rationals.  Dimensions are fixed at
/// construction; all arithmetic is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Rational& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const;
  /// True when the matrix is c*I; stores c through `value` if non-null.
  bool is_scalar(Rational* value = nullptr) const;

  Rational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  Matrix operator-() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// ab - ba.  Throws DimensionError unless both are square of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

Matrix matrix_power(const Matrix& a, unsigned exponent);

}  // namespace vla

#endif
