#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vla/errors.hpp"
#include "vla/identify.hpp"
#include "vla/linalg.hpp"
#include "vla/lsmodule.hpp"
#include "vla/rng.hpp"

using namespace vla;

namespace {

TRealization realize(const ModuleParams& p) {
  return TRealization::from_function(p.triple.dim,
                                     [p](LatticeVec r) { return t_matrix(p, r); });
}

Matrix random_invertible(std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.rational(3, 2);
    if (inverse(m)) return m;
  }
}

TRealization conjugated(const ModuleParams& p, Rng& rng) {
  Matrix c = random_invertible(p.triple.dim, rng);
  Matrix ci = *inverse(c);
  return TRealization::from_function(p.triple.dim, [p, c, ci](LatticeVec r) {
    return c * t_matrix(p, r) * ci;
  });
}

// Sample table covering the deterministic core, optionally with extra points.
std::map<LatticeVec, Matrix> core_samples(const ModuleParams& p,
                                          std::vector<LatticeVec> extra = {}) {
  std::vector<LatticeVec> pts = {kE1, -kE1, kE2, -kE2, kE1 + kE2};
  pts.insert(pts.end(), extra.begin(), extra.end());
  std::map<LatticeVec, Matrix> table;
  for (LatticeVec r : pts) table.emplace(r, t_matrix(p, r));
  return table;
}

}  // namespace

TEST_CASE("tau extraction") {
  ModuleParams p = ModuleParams::make(0, {2, 3}, 0);
  auto [tau1, tau2] = extract_taus(realize(p));
  CHECK(tau1 == 3);
  CHECK(tau2 == -2);

  for (unsigned lambda = 0; lambda <= 5; ++lambda) {
    ModuleParams q = ModuleParams::make(lambda, {0, 0}, 0);
    auto taus = extract_taus(realize(q));
    CHECK(taus.first == 0);
    CHECK(taus.second == 0);
  }

  // perturbing T(e1) by a non-scalar matrix must be flagged
  ModuleParams q = ModuleParams::make(2, {1, 1}, 0);
  auto broken = TRealization::from_function(3, [q](LatticeVec r) {
    Matrix m = t_matrix(q, r);
    if (r == kE1) m(0, 1) += 1;
    return m;
  });
  CHECK_THROWS_AS(extract_taus(broken), NonScalarTauError);
}

TEST_CASE("triple extraction") {
  ModuleParams p1 = ModuleParams::make(1, {0, 0}, 0);
  Sl2Triple t = extract_triple(realize(p1), 0, 0);
  Sl2Triple std1 = build_irrep(1);
  CHECK(t.E == std1.E);
  CHECK(t.F == std1.F);
  CHECK(t.H == std1.H);

  ModuleParams p0 = ModuleParams::make(0, {2, 3}, 0);
  Sl2Triple t0 = extract_triple(realize(p0), 3, -2);
  CHECK(t0.E.is_zero());
  CHECK(t0.F.is_zero());
  CHECK(t0.H.is_zero());

  // conjugation carries the triple along and keeps the relations exact
  Rng rng(89);
  ModuleParams p2 = ModuleParams::make(2, {rational(1, 2), -1}, 0);
  Matrix c = random_invertible(3, rng);
  Matrix ci = *inverse(c);
  auto real = TRealization::from_function(
      3, [p2, c, ci](LatticeVec r) { return c * t_matrix(p2, r) * ci; });
  auto [tau1, tau2] = extract_taus(real);
  Sl2Triple conj = extract_triple(real, tau1, tau2);
  CHECK(is_sl2_triple(conj));
  Sl2Triple plain = extract_triple(realize(p2), tau1, tau2);
  CHECK(conj.E == c * plain.E * ci);
  CHECK(matrix_power(conj.E, 3).is_zero());
  CHECK(matrix_power(conj.F, 3).is_zero());

  // breaking the quadratic coefficients breaks the Chevalley relations
  auto bad = TRealization::from_function(3, [p2](LatticeVec r) {
    Matrix m = t_matrix(p2, r);
    if (r == (kE1 + kE2)) m(0, 0) += 5;  // corrupts h only
    return m;
  });
  CHECK_THROWS_AS(extract_triple(bad, tau1, tau2), NotSl2TripleError);
}

TEST_CASE("identification round trip") {
  ModuleParams p = ModuleParams::make(0, {2, 3}, 0);
  IdentificationResult res = identify(realize(p), 16, 1);
  CHECK(res.alpha[0] == 2);
  CHECK(res.alpha[1] == 3);
  CHECK(res.lambda == 0);

  Rng rng(97);
  for (unsigned lambda = 0; lambda <= 4; ++lambda) {
    for (int trial = 0; trial < 3; ++trial) {
      std::array<Rational, 2> alpha{rng.rational(5, 4), rng.rational(5, 4)};
      ModuleParams q = ModuleParams::make(lambda, alpha, 0);
      IdentificationResult plain = identify(realize(q), 16, trial + 2);
      CHECK(plain.alpha == alpha);
      CHECK(plain.lambda == lambda);

      IdentificationResult conj = identify(conjugated(q, rng), 16, trial + 2);
      CHECK(conj.alpha == alpha);
      CHECK(conj.lambda == lambda);
      Matrix cob = conj.change_of_basis;
      Matrix cob_inv = *inverse(cob);
      Sl2Triple standard = build_irrep(lambda);
      REQUIRE(cob * conj.triple.E * cob_inv == standard.E);
      REQUIRE(cob * conj.triple.F * cob_inv == standard.F);
      REQUIRE(cob * conj.triple.H * cob_inv == standard.H);
    }
  }
}

TEST_CASE("accepted realizations have vanishing third differences") {
  Rng rng(101);
  ModuleParams p = ModuleParams::make(3, {rational(-1, 2), 5}, 0);
  TRealization real = realize(p);
  identify(real, 16, 5);  // must accept
  for (int i = 0; i < 100; ++i) {
    LatticeVec r = rng.lattice(4);
    LatticeVec u1 = rng.lattice(4), u2 = rng.lattice(4), u3 = rng.lattice(4);
    Matrix acc(p.triple.dim, p.triple.dim);
    for (int mask = 0; mask < 8; ++mask) {
      LatticeVec shift = r;
      int bits = 0;
      if (mask & 1) { shift = shift + u1; ++bits; }
      if (mask & 2) { shift = shift + u2; ++bits; }
      if (mask & 4) { shift = shift + u3; ++bits; }
      if (bits % 2)
        acc -= real.eval(shift);
      else
        acc += real.eval(shift);
    }
    REQUIRE(acc.is_zero());
  }
}

TEST_CASE("degree transforms") {
  ModuleParams p = ModuleParams::make(2, {rational(3, 4), rational(-1, 3)}, 0);
  TRealization real = realize(p);

  TRealization same = degree_transform(kE1, kE2, real);
  CHECK(same.eval({3, -2}) == real.eval({3, -2}));

  CHECK_THROWS_AS(degree_transform({2, 0}, kE2, real), NonUnimodularError);

  // swapping the axes still satisfies the bracket relation and identifies
  TRealization swapped = degree_transform(kE2, kE1, real);
  Rng rng(103);
  for (int i = 0; i < 50; ++i) {
    LatticeVec a = rng.lattice(4), b = rng.lattice(4);
    Matrix lhs = commutator(swapped.eval(a), swapped.eval(b));
    Matrix rhs = Rational(det(a, b)) *
                 (swapped.eval(a + b) - swapped.eval(a) - swapped.eval(b));
    REQUIRE(lhs == rhs);
  }
  IdentificationResult res = identify(swapped, 16, 9);
  CHECK(res.lambda == 2);

  // a shear with det = 1 keeps lambda as well
  TRealization sheared = degree_transform({1, 1}, kE2, real);
  CHECK(identify(sheared, 16, 9).lambda == 2);

  // sampled tables are pulled back through the inverse lattice map
  TRealization table = TRealization::from_samples(3, core_samples(p));
  TRealization table_swapped = degree_transform(kE2, kE1, table);
  CHECK(table_swapped.eval(kE1) == Rational(-1) * table.eval(kE2));
  CHECK(table_swapped.eval(kE1 + kE2) == Rational(-1) * table.eval(kE1 + kE2));
  CHECK(identify(table_swapped, 16, 9).lambda == 2);
}

TEST_CASE("sampled realizations and the failure taxonomy") {
  ModuleParams p = ModuleParams::make(2, {rational(1, 3), 2}, 0);

  // the deterministic core alone suffices
  TRealization core_only = TRealization::from_samples(3, core_samples(p));
  IdentificationResult res = identify(core_only, 16, 1);
  CHECK(res.lambda == 2);
  CHECK(res.alpha[0] == rational(1, 3));

  // missing core probe
  auto partial = core_samples(p);
  partial.erase(-kE2);
  CHECK_THROWS_AS(identify(TRealization::from_samples(3, partial), 16, 1),
                  BracketAuditError);

  // a cubic deformation invisible to the in-table bracket pairs is caught by
  // the final quadratic-form audit
  auto cubic = core_samples(p, {{2, 0}});
  for (auto& [r, m] : cubic)
    m += Matrix::scalar(3, Rational(r.x) * Rational(r.x) * Rational(r.x));
  CHECK_THROWS_AS(identify(TRealization::from_samples(3, cubic), 16, 1),
                  NotLarssonShenError);

  // with full functional access the same deformation already fails the audit
  auto cubic_fn = TRealization::from_function(3, [p](LatticeVec r) {
    Matrix m = t_matrix(p, r);
    m += Matrix::scalar(3, Rational(r.x) * Rational(r.x) * Rational(r.x));
    return m;
  });
  CHECK_THROWS_AS(identify(cubic_fn, 16, 1), BracketAuditError);

  // eval(0) must be the zero matrix
  auto shifted = TRealization::from_function(3, [p](LatticeVec r) {
    Matrix m = t_matrix(p, r);
    if (r.is_zero()) m += Matrix::identity(3);
    return m;
  });
  CHECK_THROWS_AS(identify(shifted, 16, 1), BracketAuditError);

  // direct sum with distinct alphas: a genuine module, but tau1 is not scalar
  ModuleParams q = ModuleParams::make(2, {rational(7, 2), -1}, 0);
  auto block = [&](LatticeVec r) {
    Matrix a = t_matrix(p, r), b = t_matrix(q, r);
    Matrix m(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        m(i, j) = a(i, j);
        m(3 + i, 3 + j) = b(i, j);
      }
    return m;
  };
  CHECK_THROWS_AS(identify(TRealization::from_function(6, block), 16, 1),
                  NonScalarTauError);

  // direct sum with equal alphas: scalar taus, valid triple, reducible
  ModuleParams p0 = ModuleParams::make(0, {rational(1, 3), 2}, 0);
  auto mixed = [&](LatticeVec r) {
    Matrix a = t_matrix(p, r), b = t_matrix(p0, r);
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = a(i, j);
    m(3, 3) = b(0, 0);
    return m;
  };
  CHECK_THROWS_AS(identify(TRealization::from_function(4, mixed), 16, 1),
                  NotIrreducibleError);
}

TEST_CASE("nilpotency witness") {
  for (unsigned lambda = 1; lambda <= 10; ++lambda) {
    Sl2Triple t = build_irrep(lambda);
    NilpotencyReport rep = nilpotency_witness(t.H, t.E, 2);
    REQUIRE(rep.premise_ok());
    REQUIRE(rep.nilpotent());
  }

  Matrix d(3, 3);
  d(0, 1) = 7;
  NilpotencyReport trivial = nilpotency_witness(d, Matrix(3, 3), 1);
  CHECK(trivial.premise_ok());
  CHECK(trivial.nilpotent());

  NilpotencyReport violated =
      nilpotency_witness(Matrix(2, 2), Matrix::identity(2), 1);
  CHECK(!violated.premise_ok());

  CHECK_THROWS_AS(nilpotency_witness(d, d, 0), Error);
  CHECK_THROWS_AS(nilpotency_witness(Matrix(2, 2), Matrix(3, 3), 1),
                  DimensionError);
}
