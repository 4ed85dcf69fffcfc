#include "vla/lsmodule.hpp"

#include <algorithm>

#include "vla/errors.hpp"
#include "vla/rng.hpp"

namespace vla {

namespace {

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace

ModuleVector ModuleVector::ket(LatticeVec degree, std::vector<Rational> coords) {
  ModuleVector m;
  m.add(degree, coords);
  return m;
}

void ModuleVector::add(LatticeVec degree, const std::vector<Rational>& coords) {
  if (all_zero(coords)) return;
  auto [it, inserted] = support_.emplace(degree, coords);
  if (!inserted) {
    if (it->second.size() != coords.size())
      throw DimensionError("module vector coordinate length mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) it->second[i] += coords[i];
    if (all_zero(it->second)) support_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  for (const auto& [deg, v] : o.support_) add(deg, v);
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  for (const auto& [deg, v] : o.support_) {
    std::vector<Rational> neg(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
    add(deg, neg);
  }
  return *this;
}

ModuleVector& ModuleVector::operator*=(const Rational& c) {
  if (c == 0) {
    support_.clear();
    return *this;
  }
  for (auto& [deg, v] : support_)
    for (Rational& x : v) x *= c;
  return *this;
}

std::string ModuleVector::str() const {
  if (support_.empty()) return "0";
  std::string s;
  for (const auto& [deg, v] : support_) {
    if (!s.empty()) s += " + ";
    s += "|(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += to_string(v[i]);
    }
    s += "), " + to_string(deg) + ">";
  }
  return s;
}

ModuleVector act_fun(const ModuleParams&, LatticeVec r, const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [deg, v] : m.support()) out.add(r + deg, v);
  return out;
}

namespace {

// Applies (scalar(s) * I + op) per degree, shifting the degree by r.
template <typename ScalarOf>
ModuleVector act_affine(LatticeVec r, const Matrix& op, ScalarOf scalar_of,
                        const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [deg, v] : m.support()) {
    std::vector<Rational> w = op.apply(v);
    Rational c = scalar_of(deg);
    for (std::size_t i = 0; i < v.size(); ++i) w[i] += c * v[i];
    out.add(r + deg, w);
  }
  return out;
}

}  // namespace

ModuleVector act_vec(const ModuleParams& p, LatticeVec r, int axis,
                     const ModuleVector& m) {
  if (axis != 1 && axis != 2) throw Error("axis must be 1 or 2");
  Matrix op(p.triple.dim, p.triple.dim);
  if (axis == 1)
    op = Rational(r.y) * p.triple.F + (Rational(r.x) / 2) * p.triple.H;
  else
    op = Rational(r.x) * p.triple.E - (Rational(r.y) / 2) * p.triple.H;
  const Rational base = p.alpha[axis - 1] + Rational(r.comp(axis)) * p.mu;
  return act_affine(
      r, op,
      [&](LatticeVec s) -> Rational { return Rational(s.comp(axis)) + base; }, m);
}

ModuleVector act_ham(const ModuleParams& p, LatticeVec r, const ModuleVector& m) {
  Matrix op = Rational(r.x * r.x) * p.triple.E - Rational(r.y * r.y) * p.triple.F -
              Rational(r.x * r.y) * p.triple.H;
  return act_affine(
      r, op,
      [&](LatticeVec s) -> Rational {
        // det(r, s + alpha) with a rational second argument
        return Rational(r.x) * (Rational(s.y) + p.alpha[1]) -
               Rational(r.y) * (Rational(s.x) + p.alpha[0]);
      },
      m);
}

ModuleVector act_element(const ModuleParams& p, const LieElement& x,
                         const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [sym, c] : x.terms()) {
    ModuleVector part;
    if (sym.kind == BasisSymbol::Kind::Fun)
      part = act_fun(p, sym.site, m);
    else
      part = act_vec(p, sym.site, sym.axis, m);
    out += c * part;
  }
  return out;
}

Matrix t_matrix(const ModuleParams& p, LatticeVec r) {
  Rational d = Rational(r.x) * p.alpha[1] - Rational(r.y) * p.alpha[0];
  return Matrix::scalar(p.triple.dim, d) + Rational(r.x * r.x) * p.triple.E -
         Rational(r.y * r.y) * p.triple.F - Rational(r.x * r.y) * p.triple.H;
}

namespace {

ModuleVector random_module_vector(Rng& rng, unsigned lambda) {
  ModuleVector m;
  int points = static_cast<int>(rng.uniform(1, 2));
  for (int i = 0; i < points; ++i) {
    std::vector<Rational> coords(lambda + 1);
    for (Rational& c : coords) c = rng.rational(4, 3);
    m.add(rng.lattice(3), coords);
  }
  if (m.is_zero()) {
    std::vector<Rational> coords(lambda + 1);
    coords[0] = 1;
    m.add({0, 0}, coords);
  }
  return m;
}

}  // namespace

AxiomReport verify_module_axioms(const ModuleParams& p, int sample_budget,
                                 std::uint64_t seed) {
  AxiomReport report;
  Rng rng(seed);

  auto fail = [&](const char* axiom, LatticeVec r, LatticeVec s,
                  const ModuleVector& m, std::string detail) {
    report.first_failure = AxiomFailure{axiom, r, s, m, std::move(detail)};
  };

  for (int i = 0; i < sample_budget && report.passed(); ++i) {
    LatticeVec r = rng.lattice(4);
    LatticeVec s = rng.lattice(4);
    ModuleVector m = random_module_vector(rng, p.lambda);
    ++report.cases_run;

    // z^r (z^s m) = z^s (z^r m) = z^{r+s} m
    ModuleVector rs = act_fun(p, r, act_fun(p, s, m));
    if (rs != act_fun(p, s, act_fun(p, r, m)) || rs != act_fun(p, r + s, m)) {
      fail("fun-associativity", r, s, m, "z^r z^s disagrees with z^{r+s}");
      break;
    }
    // z^0 m = m
    if (act_fun(p, {0, 0}, m) != m) {
      fail("unit-action", r, s, m, "z^0 is not the identity");
      break;
    }
    // [H(r), z^s] m = det(r,s) z^{r+s} m
    ModuleVector lhs = act_ham(p, r, act_fun(p, s, m)) - act_fun(p, s, act_ham(p, r, m));
    ModuleVector rhs = Rational(det(r, s)) * act_fun(p, r + s, m);
    if (lhs != rhs) {
      fail("ham-fun-commutator", r, s, m, "[H(r), z^s] != det(r,s) z^{r+s}");
      break;
    }
    // [H(r), H(s)] m = det(r,s) H(r+s) m
    lhs = act_ham(p, r, act_ham(p, s, m)) - act_ham(p, s, act_ham(p, r, m));
    rhs = Rational(det(r, s)) * act_ham(p, r + s, m);
    if (lhs != rhs) {
      fail("ham-ham-commutator", r, s, m, "[H(r), H(s)] != det(r,s) H(r+s)");
      break;
    }
    // degree grading: both actions shift support by exactly r
    for (const auto& action : {act_fun(p, r, m), act_ham(p, r, m)}) {
      for (const auto& [deg, v] : action.support()) {
        if (!m.support().count(deg - r)) {
          fail("grading", r, s, m, "support not shifted by r");
          break;
        }
      }
      if (!report.passed()) break;
    }
    if (!report.passed()) break;
    // H(r) = r_1 (z^r d_2) - r_2 (z^r d_1); the mu terms cancel
    lhs = Rational(r.x) * act_vec(p, r, 2, m) - Rational(r.y) * act_vec(p, r, 1, m);
    if (lhs != act_ham(p, r, m)) {
      fail("ham-vec-consistency", r, s, m,
           "H(r) differs from r1 z^r d2 - r2 z^r d1");
      break;
    }
    // acting by [z^r d_k, z^s d_l] equals the commutator of the actions
    int k = static_cast<int>(rng.uniform(1, 2));
    int l = static_cast<int>(rng.uniform(1, 2));
    LieElement br = bracket(LieElement::vec(r, k), LieElement::vec(s, l));
    lhs = act_vec(p, r, k, act_vec(p, s, l, m)) - act_vec(p, s, l, act_vec(p, r, k, m));
    if (lhs != act_element(p, br, m)) {
      fail("vec-bracket-compat", r, s, m,
           "commutator of derivation actions mismatches the bracket action");
      break;
    }
    // [z^r d_k, z^s] m = s_k z^{r+s} m
    lhs = act_vec(p, r, k, act_fun(p, s, m)) - act_fun(p, s, act_vec(p, r, k, m));
    if (lhs != Rational(s.comp(k)) * act_fun(p, r + s, m)) {
      fail("vec-fun-commutator", r, s, m, "[z^r d_k, z^s] != s_k z^{r+s}");
      break;
    }
  }
  return report;
}

}  // namespace vla
