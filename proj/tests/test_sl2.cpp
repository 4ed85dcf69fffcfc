#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vla/errors.hpp"
#include "vla/linalg.hpp"
#include "vla/rng.hpp"
#include "vla/sl2.hpp"

using namespace vla;

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// Stacked commutator system assembled independently of the library route;
// the oracle for commutant dimensions.
std::size_t commutant_oracle(const std::vector<Matrix>& mats) {
  const std::size_t n = mats[0].rows();
  Matrix sys(mats.size() * n * n, n * n);
  std::size_t row = 0;
  for (const Matrix& m : mats)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            Rational coeff = 0;
            if (a == i) coeff += m(b, j);
            if (b == j) coeff -= m(i, a);
            sys(row, a * n + b) += coeff;
          }
  return n * n - rref_in_place(sys);
}

}  // namespace

TEST_CASE("build_irrep small cases") {
  Sl2Triple t0 = build_irrep(0);
  CHECK(t0.dim == 1);
  CHECK(t0.E.is_zero());
  CHECK(t0.F.is_zero());
  CHECK(t0.H.is_zero());

  Sl2Triple t1 = build_irrep(1);
  CHECK(t1.E == from_rows({{0, 1}, {0, 0}}));
  CHECK(t1.F == from_rows({{0, 0}, {1, 0}}));
  CHECK(t1.H == from_rows({{1, 0}, {0, -1}}));

  Sl2Triple t2 = build_irrep(2);
  CHECK(t2.H == from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
  // E v_2 = 2 v_1, E v_1 = 2 v_0
  CHECK(t2.E == from_rows({{0, 2, 0}, {0, 0, 2}, {0, 0, 0}}));
  CHECK(commutator(t2.E, t2.F) == t2.H);
}

TEST_CASE("chevalley residuals") {
  Sl2Triple t = build_irrep(3);
  auto res = chevalley_residuals(t);
  CHECK(res[0].is_zero());
  CHECK(res[1].is_zero());
  CHECK(res[2].is_zero());

  Sl2Triple bad = build_irrep(1);
  bad.E *= Rational(2);
  auto res2 = chevalley_residuals(bad);
  CHECK(res2[0].is_zero());          // [H, 2E] - 2(2E) = 0
  CHECK(res2[2] == bad.H);           // [2E, F] - H = H
  CHECK(!is_sl2_triple(bad));

  Sl2Triple degenerate{2, Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
  CHECK(is_sl2_triple(degenerate));
}

TEST_CASE("irrep invariants up to lambda = 20") {
  for (unsigned lambda = 0; lambda <= 20; ++lambda) {
    Sl2Triple t = build_irrep(lambda);
    REQUIRE(is_sl2_triple(t));
    REQUIRE(matrix_power(t.E, lambda + 1).is_zero());
    REQUIRE(matrix_power(t.F, lambda + 1).is_zero());
    // Casimir EF + FE + H^2/2 = (lambda^2/2 + lambda) I
    Matrix casimir = t.E * t.F + t.F * t.E + (t.H * t.H) * rational(1, 2);
    Rational expected = rational(static_cast<long long>(lambda) * lambda, 2) +
                        Rational(static_cast<long>(lambda));
    REQUIRE(casimir == Matrix::scalar(t.dim, expected));
    REQUIRE(highest_weight_of(t) == lambda);
  }
}

TEST_CASE("highest weight is conjugation invariant") {
  Sl2Triple t = build_irrep(2);
  // a unimodular integer change of basis
  Matrix p = from_rows({{1, 2, 0}, {0, 1, 3}, {0, 0, 1}});
  Matrix pinv = *inverse(p);
  Sl2Triple conj{3, p * t.E * pinv, p * t.F * pinv, p * t.H * pinv};
  CHECK(is_sl2_triple(conj));
  CHECK(highest_weight_of(conj) == 2);
}

TEST_CASE("highest weight rejections") {
  // nilpotent Jordan block: integer spectrum but not diagonalizable
  Sl2Triple jordan{2, Matrix(2, 2), Matrix(2, 2), from_rows({{0, 1}, {0, 0}})};
  CHECK_THROWS_AS(highest_weight_of(jordan), NotSemisimpleHError);

  // eigenvalues +-sqrt(2): not integers
  Sl2Triple irrational{2, Matrix(2, 2), Matrix(2, 2), from_rows({{0, 2}, {1, 0}})};
  CHECK_THROWS_AS(highest_weight_of(irrational), NotSemisimpleHError);

  // repeated weight
  Sl2Triple repeated{2, Matrix(2, 2), Matrix(2, 2), from_rows({{1, 0}, {0, 1}})};
  CHECK_THROWS_AS(highest_weight_of(repeated), NotIrreducibleError);

  // multiplicity-one weights that do not form the irreducible string
  Sl2Triple gapped{3, Matrix(3, 3), Matrix(3, 3),
                   from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, -1}})};
  CHECK_THROWS_AS(highest_weight_of(gapped), NotIrreducibleError);
}

TEST_CASE("commutant dimension") {
  for (unsigned lambda = 0; lambda <= 10; ++lambda) {
    Sl2Triple t = build_irrep(lambda);
    const Matrix mats[] = {t.E, t.F, t.H};
    REQUIRE(commutant_dimension(mats) == 1);
  }

  const Matrix zero3[] = {Matrix(3, 3)};
  CHECK(commutant_dimension(zero3) == 9);

  const Matrix diag[] = {from_rows({{1, 0}, {0, -1}})};
  CHECK(commutant_dimension(diag) == 2);

  CHECK_THROWS_AS(commutant_dimension(std::span<const Matrix>{}), DimensionError);
  const Matrix mismatched[] = {Matrix(2, 2), Matrix(3, 3)};
  CHECK_THROWS_AS(commutant_dimension(mismatched), DimensionError);
}

TEST_CASE("commutant: eigenbasis route agrees with the stacked system") {
  // conjugated irrep hits the eigenbasis route; the oracle is always stacked
  Sl2Triple t = build_irrep(2);
  Matrix p = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  Matrix pinv = *inverse(p);
  std::vector<Matrix> conj = {p * t.E * pinv, p * t.F * pinv, p * t.H * pinv};
  CHECK(commutant_dimension(conj) == commutant_oracle(conj));
  CHECK(commutant_oracle(conj) == 1);

  // block direct sums are reducible
  auto block_sum = [](const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
  };
  Sl2Triple t0 = build_irrep(0);
  Sl2Triple t2 = build_irrep(2);
  std::vector<Matrix> sum = {block_sum(t0.E, t2.E), block_sum(t0.F, t2.F),
                             block_sum(t0.H, t2.H)};
  CHECK(commutant_dimension(sum) == 2);
  CHECK(commutant_oracle(sum) == 2);

  // two equal blocks: the commutant is a full 2x2 matrix algebra
  Sl2Triple t1 = build_irrep(1);
  std::vector<Matrix> twin = {block_sum(t1.E, t1.E), block_sum(t1.F, t1.F),
                              block_sum(t1.H, t1.H)};
  CHECK(commutant_dimension(twin) == 4);
  CHECK(commutant_oracle(twin) == 4);

  // random small sets exercise both routes against the oracle
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Matrix> mats;
    int count = static_cast<int>(rng.uniform(1, 2));
    for (int i = 0; i < count; ++i) {
      Matrix m(3, 3);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) m(a, b) = rng.rational(2, 1);
      mats.push_back(std::move(m));
    }
    REQUIRE(commutant_dimension(mats) == commutant_oracle(mats));
  }
}
