#include "vla/identify.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "vla/errors.hpp"
#include "vla/linalg.hpp"
#include "vla/rng.hpp"

namespace vla {

TRealization TRealization::from_function(std::size_t dim,
                                         std::function<Matrix(LatticeVec)> eval) {
  TRealization r;
  r.dim_ = dim;
  r.sampled_ = false;
  r.eval_ = std::move(eval);
  r.has_ = [](LatticeVec) { return true; };
  return r;
}

TRealization TRealization::from_samples(std::size_t dim,
                                        std::map<LatticeVec, Matrix> samples) {
  auto table = std::make_shared<std::map<LatticeVec, Matrix>>(std::move(samples));
  TRealization r;
  r.dim_ = dim;
  r.sampled_ = true;
  for (const auto& [point, m] : *table) {
    if (!m.is_square() || m.rows() != dim)
      throw DimensionError("sample matrix has wrong shape");
    r.points_.push_back(point);
  }
  r.eval_ = [table, dim](LatticeVec p) -> Matrix {
    if (p.is_zero()) return Matrix(dim, dim);
    auto it = table->find(p);
    if (it == table->end())
      throw Error("realization has no sample at " + to_string(p));
    return it->second;
  };
  r.has_ = [table](LatticeVec p) {
    return p.is_zero() || table->count(p) > 0;
  };
  return r;
}

bool TRealization::has(LatticeVec r) const { return has_(r); }

Matrix TRealization::eval(LatticeVec r) const { return eval_(r); }

TRealization degree_transform(LatticeVec r, LatticeVec s, const TRealization& real) {
  long d = det(r, s);
  if (d != 1 && d != -1)
    throw NonUnimodularError("degree transform needs det(r,s) = +-1, got " +
                             std::to_string(d));
  auto theta = [r, s](LatticeVec u) { return u.x * r + u.y * s; };
  TRealization out;
  if (real.sampled()) {
    // theta is invertible over the lattice, so pull the table back through it
    std::map<LatticeVec, Matrix> table;
    IntMat2 inv{d * s.y, -d * s.x, -d * r.y, d * r.x};
    for (LatticeVec p : real.known_points()) {
      Matrix value = Rational(d) * real.eval(p);
      table.emplace(inv.apply(p), std::move(value));
    }
    out = TRealization::from_samples(real.dim(), std::move(table));
  } else {
    out = TRealization::from_function(real.dim(), [d, theta, real](LatticeVec u) {
      return Rational(d) * real.eval(theta(u));
    });
  }
  return out;
}

std::pair<Rational, Rational> extract_taus(const TRealization& real) {
  auto linear_coeff = [&](LatticeVec e, const char* name) {
    Matrix m = (real.eval(e) - real.eval(-e)) * Rational(1, 2);
    Rational value;
    if (!m.is_scalar(&value))
      throw NonScalarTauError(std::string(name) +
                              " is not a scalar multiple of the identity");
    return value;
  };
  Rational tau1 = linear_coeff(kE1, "tau1");
  Rational tau2 = linear_coeff(kE2, "tau2");
  return {tau1, tau2};
}

Sl2Triple extract_triple(const TRealization& real, const Rational& tau1,
                         const Rational& tau2) {
  const std::size_t n = real.dim();
  Sl2Triple t;
  t.dim = n;
  t.E = real.eval(kE1) - Matrix::scalar(n, tau1);
  t.F = -(real.eval(kE2) - Matrix::scalar(n, tau2));
  t.H = real.eval(kE1) + real.eval(kE2) - real.eval(kE1 + kE2);
  auto res = chevalley_residuals(t);
  if (!res[0].is_zero() || !res[1].is_zero() || !res[2].is_zero())
    throw NotSl2TripleError("extracted operators violate the Chevalley relations");
  if (!matrix_power(t.E, static_cast<unsigned>(n)).is_zero() ||
      !matrix_power(t.F, static_cast<unsigned>(n)).is_zero())
    throw NotSl2TripleError("extracted raising/lowering operator is not nilpotent");
  return t;
}

namespace {

const LatticeVec kCore[] = {kE1, -kE1, kE2, -kE2, kE1 + kE2};

std::vector<LatticeVec> probe_points(const TRealization& real, int probe_budget,
                                     std::uint64_t seed) {
  std::vector<LatticeVec> probes(std::begin(kCore), std::end(kCore));
  for (LatticeVec p : probes)
    if (!real.has(p))
      throw BracketAuditError("realization does not cover the probe core at " +
                              to_string(p));
  std::set<LatticeVec> seen(probes.begin(), probes.end());
  if (real.sampled()) {
    for (LatticeVec p : real.known_points())
      if (!p.is_zero() && seen.insert(p).second) probes.push_back(p);
  } else {
    Rng rng(seed);
    for (int i = 0; i < probe_budget; ++i) {
      LatticeVec p = rng.nonzero_lattice(5);
      if (seen.insert(p).second) probes.push_back(p);
    }
  }
  return probes;
}

void audit_pair(const TRealization& real, LatticeVec p, LatticeVec q) {
  Matrix lhs = commutator(real.eval(p), real.eval(q));
  Matrix rhs = Rational(det(p, q)) *
               (real.eval(p + q) - real.eval(p) - real.eval(q));
  if (!(lhs == rhs))
    throw BracketAuditError("bracket relation fails on the pair " + to_string(p) +
                            ", " + to_string(q));
}

void bracket_audit(const TRealization& real, const std::vector<LatticeVec>& probes,
                   int probe_budget, std::uint64_t seed) {
  if (!real.eval({0, 0}).is_zero())
    throw BracketAuditError("eval(0) is not the zero matrix");
  if (real.sampled()) {
    // Sample tables are small: audit every pair whose sum is in the table.
    for (std::size_t i = 0; i < probes.size(); ++i)
      for (std::size_t j = i + 1; j < probes.size(); ++j) {
        if (!real.has(probes[i] + probes[j])) continue;
        audit_pair(real, probes[i], probes[j]);
      }
    return;
  }
  // Functional realizations: all pairs within the deterministic core, plus
  // probe_budget seeded pairs drawn from the full probe list.
  const std::size_t ncore = std::size(kCore);
  for (std::size_t i = 0; i < ncore; ++i)
    for (std::size_t j = i + 1; j < ncore; ++j)
      audit_pair(real, probes[i], probes[j]);
  Rng rng(seed + 0x517CC1B727220A95ULL);
  const long long last = static_cast<long long>(probes.size()) - 1;
  for (int t = 0; t < probe_budget; ++t) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, last));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, last));
    if (i == j) continue;
    audit_pair(real, probes[i], probes[j]);
  }
}

}  // namespace

IdentificationResult identify(const TRealization& real, int probe_budget,
                              std::uint64_t seed) {
  const std::size_t n = real.dim();
  if (n < 1) throw Error("realization dimension must be at least 1");

  std::vector<LatticeVec> probes = probe_points(real, probe_budget, seed);
  bracket_audit(real, probes, probe_budget, seed);

  auto [tau1, tau2] = extract_taus(real);
  Sl2Triple triple = extract_triple(real, tau1, tau2);

  const Matrix trip[] = {triple.E, triple.F, triple.H};
  if (commutant_dimension(trip) != 1)
    throw NotIrreducibleError("commutant dimension exceeds 1");

  unsigned lambda = highest_weight_of(triple);

  // Highest-weight vector: ker(E) intersected with the lambda-eigenspace of H.
  Matrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      stacked(i, j) = triple.H(i, j) - (i == j ? Rational(lambda) : Rational(0));
      stacked(n + i, j) = triple.E(i, j);
    }
  auto hw = nullspace(stacked);
  if (hw.size() != 1)
    throw NotIrreducibleError("highest-weight space is not one-dimensional");
  std::vector<Rational> v0 = hw[0];
  for (const Rational& c : v0)
    if (c != 0) {
      Rational inv = 1 / c;
      for (Rational& x : v0) x *= inv;
      break;
    }

  // Columns F^i v0 express the standard basis inside the input basis.
  Matrix basis(n, n);
  std::vector<Rational> w = v0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t row = 0; row < n; ++row) basis(row, i) = w[row];
    if (i + 1 < n) w = triple.F.apply(w);
  }
  auto basis_inv = inverse(basis);
  if (!basis_inv)
    throw NotIrreducibleError("lowering orbit of the highest-weight vector "
                              "does not span the module");
  Matrix cob = *basis_inv;

  Sl2Triple standard = build_irrep(lambda);
  if (!(cob * triple.E * basis == standard.E) ||
      !(cob * triple.F * basis == standard.F) ||
      !(cob * triple.H * basis == standard.H))
    throw NotIrreducibleError("change of basis does not normalize the triple");

  // Final audit: the realization must be exactly the quadratic family the
  // extracted data predicts, on every probe.
  for (LatticeVec p : probes) {
    Matrix expected = Matrix::scalar(n, Rational(p.x) * tau1 + Rational(p.y) * tau2) +
                      Rational(p.x * p.x) * triple.E -
                      Rational(p.y * p.y) * triple.F -
                      Rational(p.x * p.y) * triple.H;
    if (!(real.eval(p) == expected))
      throw NotLarssonShenError("realization deviates from the quadratic form at " +
                                to_string(p));
  }

  IdentificationResult result;
  result.alpha = {-tau2, tau1};
  result.lambda = lambda;
  result.tau1 = tau1;
  result.tau2 = tau2;
  result.triple = std::move(triple);
  result.change_of_basis = std::move(cob);
  return result;
}

NilpotencyReport nilpotency_witness(const Matrix& d, const Matrix& e,
                                    const Rational& delta) {
  if (!d.is_square() || !e.is_square() || d.rows() != e.rows())
    throw DimensionError("nilpotency witness needs equal square matrices");
  if (delta == 0) throw Error("nilpotency witness requires delta != 0");
  NilpotencyReport rep{commutator(d, e) - delta * e,
                       matrix_power(e, static_cast<unsigned>(e.rows()))};
  return rep;
}

}  // namespace vla
