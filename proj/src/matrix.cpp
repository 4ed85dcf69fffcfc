#include "vla/matrix.hpp"

#include "vla/errors.hpp"

namespace vla {

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool Matrix::is_zero() const {
  for (const Rational& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_scalar(Rational* value) const {
  if (!is_square() || rows_ == 0) return false;
  const Rational& c = data_[0];
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? c : Rational(0))) return false;
  if (value) *value = c;
  return true;
}

Rational Matrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sub shape");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (Rational& x : data_) x *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (Rational& x : r.data_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw DimensionError("matrix apply shape");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("commutator needs equal square matrices");
  return a * b - b * a;
}

Matrix matrix_power(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < exponent; ++i) r = r * a;
  return r;
}

}  // namespace vla
