#include "vla/sl2.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "vla/errors.hpp"
#include "vla/linalg.hpp"

namespace vla {

Sl2Triple build_irrep(unsigned lambda) {
  const std::size_t n = lambda + 1;
  Sl2Triple t{n, Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.H(i, i) = Rational(static_cast<long>(lambda) - 2 * static_cast<long>(i));
    if (i + 1 < n) {
      t.F(i + 1, i) = 1;
      // E v_{i+1} = (i+1)(lambda-i) v_i
      t.E(i, i + 1) =
          Rational(static_cast<long>(i + 1)) * Rational(static_cast<long>(lambda - i));
    }
  }
  if (!is_sl2_triple(t)) throw Error("build_irrep produced an invalid triple");
  return t;
}

std::array<Matrix, 3> chevalley_residuals(const Sl2Triple& t) {
  return {commutator(t.H, t.E) - Rational(2) * t.E,
          commutator(t.H, t.F) + Rational(2) * t.F,
          commutator(t.E, t.F) - t.H};
}

bool is_sl2_triple(const Sl2Triple& t) {
  auto res = chevalley_residuals(t);
  return res[0].is_zero() && res[1].is_zero() && res[2].is_zero();
}

namespace {

// Integer roots of a monic rational polynomial, with multiplicities, found
// by scanning the Cauchy-style bound 1 + max|c_i| and deflating.
std::map<long long, unsigned> integer_roots(std::vector<Rational> p) {
  Rational bound = 1;
  for (const Rational& c : p) {
    Rational a = abs(c);
    if (a > bound) bound = a;
  }
  bound += 1;
  mpz_class limit_z = bound.get_num() / bound.get_den() + 2;
  if (!limit_z.fits_slong_p()) throw Error("eigenvalue bound too large to scan");
  long long limit = limit_z.get_si();

  std::map<long long, unsigned> roots;
  for (long long c = -limit; c <= limit; ++c) {
    while (p.size() > 1 && eval_poly(p, Rational(static_cast<long>(c))) == 0) {
      ++roots[c];
      // synthetic division by (t - c)
      std::vector<Rational> q(p.size() - 1);
      Rational carry = 0;
      for (std::size_t i = p.size(); i-- > 1;) {
        q[i - 1] = p[i] + carry;
        carry = q[i - 1] * Rational(static_cast<long>(c));
      }
      p = std::move(q);
    }
  }
  return roots;
}

}  // namespace

unsigned highest_weight_of(const Sl2Triple& t) {
  if (!t.H.is_square() || t.H.rows() != t.dim)
    throw DimensionError("triple dimension mismatch");
  const std::size_t n = t.dim;
  std::vector<Rational> p = char_poly(t.H);

  // Fast accept: the spectrum of the n-dimensional irreducible module.
  if (p == sl2_weight_poly(n)) return static_cast<unsigned>(n - 1);

  auto roots = integer_roots(p);
  unsigned total = 0;
  for (auto& [root, mult] : roots) total += mult;
  if (total < n)
    throw NotSemisimpleHError("H has eigenvalues outside the integers");
  for (auto& [root, mult] : roots) {
    Matrix shifted = t.H;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Rational(static_cast<long>(root));
    std::size_t geometric = n - rank(std::move(shifted));
    if (geometric < mult)
      throw NotSemisimpleHError("H is not diagonalizable over the rationals");
    if (mult != 1)
      throw NotIrreducibleError("H has a repeated weight");
  }
  // All multiplicities are one but the spectrum is not the unbroken string
  // lambda, lambda-2, ..., -lambda (that case was the fast accept above).
  throw NotIrreducibleError("weights do not form a single irreducible string");
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t components() {
    std::size_t c = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

// Commutant dimension computed in the eigenbasis of `regular`, whose
// spectrum must be the n distinct integers n-1-2i.  Any X commuting with a
// matrix with distinct eigenvalues is diagonal in its eigenbasis, so each
// remaining constraint [X, A] = 0 reads (x_i - x_j) A'_{ij} = 0.
std::size_t commutant_via_eigenbasis(std::span<const Matrix> mats,
                                     std::size_t regular) {
  const std::size_t n = mats[regular].rows();
  Matrix basis(n, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational eigen(static_cast<long>(n) - 1 - 2 * static_cast<long>(i));
    Matrix shifted = mats[regular];
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) -= eigen;
    auto vecs = nullspace(shifted);
    if (vecs.size() != 1) throw Error("unexpected eigenspace dimension");
    for (std::size_t r = 0; r < n; ++r) basis(r, col) = vecs[0][r];
    ++col;
  }
  auto inv = inverse(basis);
  if (!inv) throw Error("eigenbasis not invertible");

  UnionFind uf(n);
  for (std::size_t m = 0; m < mats.size(); ++m) {
    if (m == regular) continue;
    Matrix a = *inv * mats[m] * basis;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0 || a(j, i) != 0) uf.unite(i, j);
  }
  return uf.components();
}

std::size_t commutant_stacked(std::span<const Matrix> mats) {
  const std::size_t n = mats[0].rows();
  Matrix system(mats.size() * n * n, n * n);
  std::size_t row = 0;
  for (const Matrix& m : mats) {
    // (XM - MX)_{ij} = sum_b X_{ib} M_{bj} - sum_a M_{ia} X_{aj}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t b = 0; b < n; ++b) system(row, i * n + b) += m(b, j);
        for (std::size_t a = 0; a < n; ++a) system(row, a * n + j) -= m(i, a);
      }
  }
  return n * n - rref_in_place(system);
}

}  // namespace

std::size_t commutant_dimension(std::span<const Matrix> mats) {
  if (mats.empty()) throw DimensionError("commutant of empty set");
  const std::size_t n = mats[0].rows();
  for (const Matrix& m : mats)
    if (!m.is_square() || m.rows() != n)
      throw DimensionError("commutant matrices must be square of equal size");

  std::vector<Rational> target = sl2_weight_poly(n);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (char_poly(mats[i]) == target) return commutant_via_eigenbasis(mats, i);
  return commutant_stacked(mats);
}

}  // namespace vla
