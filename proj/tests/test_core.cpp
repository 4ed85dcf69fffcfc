#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vla/errors.hpp"
#include "vla/lattice.hpp"
#include "vla/linalg.hpp"
#include "vla/matrix.hpp"
#include "vla/rng.hpp"

using namespace vla;

TEST_CASE("rational canonical form and parsing") {
  CHECK(to_string(parse_rational("7/21")) == "1/3");
  CHECK(to_string(parse_rational("-4/8")) == "-1/2");
  CHECK(to_string(parse_rational("5")) == "5");
  CHECK(to_string(rational(3, -9)) == "-1/3");  // positive denominator
  CHECK(rational(0, 7) == 0);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(rational(1, 0), ParseError);
}

TEST_CASE("rational arithmetic round trips") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.rational(50, 20);
    if (a == 0) continue;
    Rational b = 1 / a;
    CHECK(a * b == 1);
    CHECK(parse_rational(to_string(a)) == a);
  }
}

TEST_CASE("lattice determinant") {
  CHECK(det(kE1, kE2) == 1);
  LatticeVec r{4, -7};
  CHECK(det(r, r) == 0);
  CHECK(det({2, 3}, {5, 7}) == -1);

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    LatticeVec a = rng.lattice(20), b = rng.lattice(20), c = rng.lattice(20);
    CHECK(det(a, b) == -det(b, a));
    CHECK(det(a + c, b) == det(a, b) + det(c, b));
  }
}

TEST_CASE("integral matrix action on the lattice") {
  CHECK(IntMat2{}.apply({3, -2}) == LatticeVec{3, -2});
  IntMat2 swap{0, 1, 1, 0};
  CHECK(swap.apply(kE1) == kE2);
  IntMat2 shear{1, 1, 0, 1};
  CHECK(shear.apply({2, 3}) == LatticeVec{5, 3});
}

namespace {

Matrix from_rows(std::vector<std::vector<long>> rows) {
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("matrix commutator") {
  Matrix e = from_rows({{0, 1}, {0, 0}});
  Matrix f = from_rows({{0, 0}, {1, 0}});
  Matrix h = from_rows({{1, 0}, {0, -1}});
  CHECK(commutator(e, f) == h);
  CHECK(commutator(e, e).is_zero());
  CHECK(commutator(h, e) == from_rows({{0, 2}, {0, 0}}));
  CHECK_THROWS_AS(commutator(e, Matrix(3, 3)), DimensionError);
  CHECK_THROWS_AS(commutator(Matrix(2, 3), Matrix(2, 3)), DimensionError);
}

TEST_CASE("matrix scalar detection and powers") {
  Matrix m = Matrix::scalar(3, rational(5, 2));
  Rational c;
  CHECK(m.is_scalar(&c));
  CHECK(c == rational(5, 2));
  m(1, 2) = 1;
  CHECK(!m.is_scalar());

  Matrix n = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(!matrix_power(n, 2).is_zero());
  CHECK(matrix_power(n, 3).is_zero());
  CHECK(matrix_power(n, 0) == Matrix::identity(3));
}

TEST_CASE("rref, rank and nullspace") {
  Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(rank(m) == 2);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (const auto& v : ns) {
    auto image = m.apply(v);
    for (const Rational& x : image) CHECK(x == 0);
  }
  CHECK(nullspace(Matrix::identity(4)).empty());
  CHECK(nullspace(Matrix(2, 2)).size() == 2);  // zero map: all of Q^2
}

TEST_CASE("inverse") {
  Rng rng(11);
  int invertible = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rng.rational(5, 3);
    auto inv = inverse(m);
    if (!inv) continue;
    ++invertible;
    CHECK(m * *inv == Matrix::identity(4));
    CHECK(*inv * m == Matrix::identity(4));
  }
  CHECK(invertible > 0);
  CHECK(!inverse(Matrix(3, 3)).has_value());
}

TEST_CASE("characteristic polynomial") {
  Matrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
  std::vector<Rational> p = char_poly(d);
  REQUIRE(p.size() == 4);
  CHECK(p[3] == 1);
  CHECK(p[2] == -6);
  CHECK(p[1] == 11);
  CHECK(p[0] == -6);
  CHECK(eval_poly(p, 2) == 0);
  CHECK(eval_poly(p, 0) == -6);

  Matrix diag(3, 3);
  diag(0, 0) = 2;
  diag(1, 1) = 0;
  diag(2, 2) = -2;
  CHECK(char_poly(diag) == sl2_weight_poly(3));
}
