#include "vla/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "vla/errors.hpp"
#include "vla/json_io.hpp"
#include "vla/liealg.hpp"
#include "vla/lsmodule.hpp"
#include "vla/rng.hpp"
#include "vla/tcalc.hpp"

namespace vla {

namespace {

constexpr SuiteInfo kCatalog[] = {
    {"jacobi",
     "Jacobi identity of the function/derivation semidirect-sum bracket, "
     "exhaustive over basis triples plus random elements",
     500, -1, -1, 2},
    {"poisson-consistency",
     "closure [H(r),H(s)] = det(r,s) H(r+s), [H(r),z^s] = det(r,s) z^{r+s}, "
     "and agreement of the Poisson bracket with the Hamiltonian action",
     50, -1, -1, 5},
    {"module-axioms",
     "graded (function-algebra, Hamiltonian) module axioms of the weight "
     "modules, plus derivation/Hamiltonian consistency",
     200, 6, -1, 4},
    {"t-bracket",
     "antisymmetry and Jacobi for the degree-zero operator bracket, and the "
     "bracket relation satisfied by the t-matrix family",
     300, 4, -1, 4},
    {"delta-identities",
     "permutation symmetry, sign rule, recursion and slot additivity of the "
     "iterated differences",
     200, -1, 6, 3},
    {"commutator-identity",
     "both closed forms of [T(r), Delta_k(s; u_1..u_k)] against direct "
     "expansion",
     200, -1, 6, 4},
    {"x-eigen",
     "eigenvalue identity X Delta_k(e1; e2^k) = k Delta_k(e1; e2^k) for "
     "X = -ad T(-e2) ad T(-e1)",
     -1, -1, 8, -1},
    {"sym-power",
     "adjoint action on k-th differences matches the k-th symmetric power of "
     "the defining 2-dimensional representation",
     100, -1, 6, 3},
    {"weight-check",
     "[T(e1)+T(e2)-T(e1+e2), Delta^l] = (2l-k) Delta^l on symmetric classes",
     -1, -1, 6, -1},
    {"delta3-vanish",
     "third differences of the t-matrix family vanish identically",
     200, 10, -1, 4},
    {"mu-independence",
     "the restricted module action and t-matrices do not depend on mu",
     50, 6, -1, 4},
};

int value_or(int v, int fallback) { return v < 0 ? fallback : v; }

struct Ctx {
  SuiteReport report;
  SuiteOptions opt;

  void fail(std::string description, json witness) {
    witness["seed"] = opt.seed;
    report.failures.push_back({std::move(description), std::move(witness)});
  }
};

json lie_witness(const LieElement& e) { return to_json(e); }

LieElement random_symbol(Rng& rng, int range) {
  LatticeVec site = rng.lattice(range);
  if (rng.uniform(0, 2) == 0) return LieElement::fun(site);
  return LieElement::vec(site, static_cast<int>(rng.uniform(1, 2)));
}

LieElement random_lie_element(Rng& rng, int range, int max_terms) {
  LieElement e;
  long long terms = rng.uniform(1, max_terms);
  for (long long i = 0; i < terms; ++i) {
    Rational c = rng.rational(3, 2);
    if (c == 0) c = 1;
    e += c * random_symbol(rng, range);
  }
  return e;
}

TExpression random_t_expression(Rng& rng, int range, int max_terms) {
  TExpression e;
  long long terms = rng.uniform(1, max_terms);
  for (long long i = 0; i < terms; ++i) {
    Rational c = rng.rational(3, 2);
    if (c == 0) c = 1;
    e += c * TExpression::t(rng.lattice(range));
  }
  return e;
}

std::array<Rational, 2> random_alpha(Rng& rng) {
  return {rng.rational(5, 4), rng.rational(5, 4)};
}

// ---------------------------------------------------------------------------

void suite_jacobi(Ctx& c) {
  const int range = c.opt.range;
  std::vector<LieElement> symbols;
  for (long x = -range; x <= range; ++x)
    for (long y = -range; y <= range; ++y) {
      symbols.push_back(LieElement::fun({x, y}));
      symbols.push_back(LieElement::vec({x, y}, 1));
      symbols.push_back(LieElement::vec({x, y}, 2));
    }
  for (std::size_t i = 0; i < symbols.size(); ++i)
    for (std::size_t j = 0; j < symbols.size(); ++j)
      for (std::size_t k = 0; k < symbols.size(); ++k) {
        ++c.report.cases;
        if (!jacobi_residual(symbols[i], symbols[j], symbols[k]).is_zero()) {
          c.fail("Jacobi residual nonzero on basis triple",
                 json{{"x", lie_witness(symbols[i])},
                      {"y", lie_witness(symbols[j])},
                      {"z", lie_witness(symbols[k])}});
          return;
        }
      }
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    LieElement x = random_lie_element(rng, 3, 3);
    LieElement y = random_lie_element(rng, 3, 3);
    LieElement z = random_lie_element(rng, 3, 3);
    ++c.report.cases;
    if (!jacobi_residual(x, y, z).is_zero()) {
      c.fail("Jacobi residual nonzero on random elements",
             json{{"case", t},
                  {"x", lie_witness(x)},
                  {"y", lie_witness(y)},
                  {"z", lie_witness(z)}});
      return;
    }
  }
}

void suite_poisson(Ctx& c) {
  const int range = c.opt.range;
  for (long rx = -range; rx <= range; ++rx)
    for (long ry = -range; ry <= range; ++ry)
      for (long sx = -range; sx <= range; ++sx)
        for (long sy = -range; sy <= range; ++sy) {
          LatticeVec r{rx, ry}, s{sx, sy};
          Rational d(det(r, s));
          ++c.report.cases;
          if (bracket(hamiltonian(r), hamiltonian(s)) != d * hamiltonian(r + s)) {
            c.fail("[H(r),H(s)] != det(r,s) H(r+s)",
                   json{{"r", to_json(r)}, {"s", to_json(s)}});
            return;
          }
          if (bracket(hamiltonian(r), LieElement::fun(s)) !=
              d * LieElement::fun(r + s)) {
            c.fail("[H(r),z^s] != det(r,s) z^{r+s}",
                   json{{"r", to_json(r)}, {"s", to_json(s)}});
            return;
          }
        }
  // Poisson bracket against the theta-derivative evaluation on exponentials.
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    LatticeVec r = rng.lattice(6), s = rng.lattice(6);
    Rational through_derivatives =
        -Rational(r.y) * Rational(s.x) + Rational(r.x) * Rational(s.y);
    LieElement expected = through_derivatives * LieElement::fun(r + s);
    ++c.report.cases;
    if (poisson(r, s) != expected ||
        bracket(hamiltonian(r), LieElement::fun(s)) != expected) {
      c.fail("Poisson bracket disagrees with the derivative formula",
             json{{"case", t}, {"r", to_json(r)}, {"s", to_json(s)}});
      return;
    }
  }
}

void suite_module_axioms(Ctx& c) {
  const Rational mus[] = {Rational(0), Rational(1), Rational(-2, 3)};
  Rng alpha_rng(c.opt.seed);
  for (unsigned lambda = 0; lambda <= static_cast<unsigned>(c.opt.max_lambda);
       ++lambda) {
    for (int a = 0; a < 5; ++a) {
      std::array<Rational, 2> alpha = random_alpha(alpha_rng);
      for (const Rational& mu : mus) {
        ModuleParams p = ModuleParams::make(lambda, alpha, mu);
        AxiomReport rep =
            verify_module_axioms(p, c.opt.samples, c.opt.seed + lambda * 31 + a);
        c.report.cases += rep.cases_run;
        if (!rep.passed()) {
          const AxiomFailure& f = *rep.first_failure;
          c.fail("module axiom '" + f.axiom + "' fails: " + f.detail,
                 json{{"params", params_to_json(p)},
                      {"axiom", f.axiom},
                      {"r", to_json(f.r)},
                      {"s", to_json(f.s)},
                      {"m", to_json(f.m)}});
          return;
        }
      }
    }
  }
}

void suite_t_bracket(Ctx& c) {
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    TExpression x = random_t_expression(rng, 3, 3);
    TExpression y = random_t_expression(rng, 3, 3);
    TExpression z = random_t_expression(rng, 3, 3);
    ++c.report.cases;
    if (!(t_bracket(x, y) + t_bracket(y, x)).is_zero()) {
      c.fail("t_bracket antisymmetry violated",
             json{{"case", t}, {"x", to_json(x)}, {"y", to_json(y)}});
      return;
    }
    TExpression jac = t_bracket(x, t_bracket(y, z)) +
                      t_bracket(y, t_bracket(z, x)) +
                      t_bracket(z, t_bracket(x, y));
    if (!jac.is_zero()) {
      c.fail("t_bracket Jacobi violated",
             json{{"case", t},
                  {"x", to_json(x)},
                  {"y", to_json(y)},
                  {"z", to_json(z)}});
      return;
    }
  }
  // Matrix realization: [T(r),T(s)] = det(r,s){T(r+s)-T(r)-T(s)} brute force.
  for (unsigned lambda = 0; lambda <= static_cast<unsigned>(c.opt.max_lambda);
       ++lambda) {
    for (int a = 0; a < 3; ++a) {
      ModuleParams p = ModuleParams::make(lambda, random_alpha(rng), 0);
      for (int t = 0; t < c.opt.samples / 3; ++t) {
        LatticeVec r = rng.lattice(c.opt.range), s = rng.lattice(c.opt.range);
        Matrix lhs = commutator(t_matrix(p, r), t_matrix(p, s));
        Matrix rhs = Rational(det(r, s)) *
                     (t_matrix(p, r + s) - t_matrix(p, r) - t_matrix(p, s));
        ++c.report.cases;
        if (!(lhs == rhs)) {
          c.fail("t-matrix bracket relation fails",
                 json{{"params", params_to_json(p)},
                      {"r", to_json(r)},
                      {"s", to_json(s)}});
          return;
        }
      }
    }
  }
}

void suite_delta_identities(Ctx& c) {
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    int k = static_cast<int>(rng.uniform(1, c.opt.max_k));
    LatticeVec r = rng.lattice(c.opt.range);
    std::vector<LatticeVec> us;
    for (int i = 0; i < k; ++i) us.push_back(rng.lattice(c.opt.range));
    LatticeVec u_prime = rng.lattice(c.opt.range);

    DeltaCombinatoricsReport rep = verify_delta_combinatorics(r, us, u_prime);
    json witness{{"case", t}, {"k", k}, {"r", to_json(r)}, {"uprime", to_json(u_prime)}};
    json slots = json::array();
    for (LatticeVec u : us) slots.push_back(to_json(u));
    witness["us"] = slots;

    ++c.report.cases;
    if (!rep.all_zero()) {
      const char* which = !rep.permutation.is_zero() ? "permutation"
                          : !rep.sign.is_zero()      ? "sign"
                          : !rep.recursion.is_zero() ? "recursion"
                                                     : "additivity";
      witness["identity"] = which;
      c.fail(std::string("difference identity '") + which + "' fails", witness);
      return;
    }
    // random shuffle, beyond the reversal the report covers
    std::vector<LatticeVec> shuffled = us;
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1],
                shuffled[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(i) - 1))]);
    ++c.report.cases;
    if (delta(r, us) != delta(r, shuffled)) {
      witness["identity"] = "permutation-shuffle";
      c.fail("difference not symmetric under random shuffle", witness);
      return;
    }
  }
}

void suite_commutator_identity(Ctx& c) {
  if (c.opt.max_k < 2) throw Error("commutator-identity requires max-k >= 2");
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    int k = static_cast<int>(rng.uniform(2, c.opt.max_k));
    LatticeVec r = rng.lattice(c.opt.range), s = rng.lattice(c.opt.range);
    std::vector<LatticeVec> us;
    for (int i = 0; i < k; ++i) us.push_back(rng.lattice(c.opt.range));
    CommutatorIdentityReport rep = verify_commutator_identity(r, s, us);
    ++c.report.cases;
    if (!rep.all_zero()) {
      json slots = json::array();
      for (LatticeVec u : us) slots.push_back(to_json(u));
      c.fail("commutator identity residual nonzero",
             json{{"case", t},
                  {"k", k},
                  {"r", to_json(r)},
                  {"s", to_json(s)},
                  {"us", slots},
                  {"residual_form1", to_json(rep.residual_form1)},
                  {"residual_form2", to_json(rep.residual_form2)}});
      return;
    }
  }
}

void suite_x_eigen(Ctx& c) {
  for (int k = 1; k <= c.opt.max_k; ++k) {
    TExpression residual = x_eigen_residual(k);
    ++c.report.cases;
    if (!residual.is_zero()) {
      c.fail("X-eigenvalue identity fails at k=" + std::to_string(k),
             json{{"k", k}, {"residual", to_json(residual)}});
    }
  }
}

void suite_sym_power(Ctx& c) {
  if (c.opt.max_k < 2) throw Error("sym-power requires max-k >= 2");
  Rng rng(c.opt.seed);
  for (int t = 0; t < c.opt.samples; ++t) {
    int k = static_cast<int>(rng.uniform(2, c.opt.max_k));
    LatticeVec r = rng.lattice(c.opt.range);
    std::vector<LatticeVec> us;
    for (int i = 0; i < k; ++i) us.push_back(rng.lattice(c.opt.range));
    AdjointSymPowerReport rep = adjoint_on_symmetric_power(r, us);
    ++c.report.cases;
    if (!rep.zero()) {
      json slots = json::array();
      for (LatticeVec u : us) slots.push_back(to_json(u));
      c.fail("symmetric-power correspondence fails",
             json{{"case", t},
                  {"k", k},
                  {"r", to_json(r)},
                  {"us", slots},
                  {"bracket_side", rep.bracket_side.str()},
                  {"derivation_side", rep.derivation_side.str()}});
      return;
    }
  }
}

void suite_weight_check(Ctx& c) {
  if (c.opt.max_k < 2) throw Error("weight-check requires max-k >= 2");
  for (int k = 2; k <= c.opt.max_k; ++k)
    for (int l = 0; l <= k; ++l) {
      WeightCheckReport rep = weight_check(k, l);
      ++c.report.cases;
      if (!rep.zero()) {
        c.fail("weight identity fails",
               json{{"k", k},
                    {"l", l},
                    {"got", rep.got.str()},
                    {"want", rep.want.str()}});
        return;
      }
    }
}

void suite_delta3_vanish(Ctx& c) {
  Rng rng(c.opt.seed);
  for (unsigned lambda = 0; lambda <= static_cast<unsigned>(c.opt.max_lambda);
       ++lambda) {
    for (int a = 0; a < 10; ++a) {
      ModuleParams p = ModuleParams::make(lambda, random_alpha(rng), 0);
      for (int t = 0; t < c.opt.samples / 10; ++t) {
        LatticeVec r = rng.lattice(c.opt.range);
        LatticeVec u[3] = {rng.lattice(c.opt.range), rng.lattice(c.opt.range),
                           rng.lattice(c.opt.range)};
        Matrix acc(p.triple.dim, p.triple.dim);
        for (int mask = 0; mask < 8; ++mask) {
          LatticeVec shift = r;
          int bits = 0;
          for (int i = 0; i < 3; ++i)
            if (mask >> i & 1) {
              shift = shift + u[i];
              ++bits;
            }
          if (bits % 2)
            acc -= t_matrix(p, shift);
          else
            acc += t_matrix(p, shift);
        }
        ++c.report.cases;
        if (!acc.is_zero()) {
          c.fail("third difference of the t-matrix family is nonzero",
                 json{{"params", params_to_json(p)},
                      {"r", to_json(r)},
                      {"u1", to_json(u[0])},
                      {"u2", to_json(u[1])},
                      {"u3", to_json(u[2])}});
          return;
        }
      }
    }
  }
}

void suite_mu_independence(Ctx& c) {
  Rng rng(c.opt.seed);
  for (unsigned lambda = 0; lambda <= static_cast<unsigned>(c.opt.max_lambda);
       ++lambda) {
    for (int a = 0; a < 5; ++a) {
      std::array<Rational, 2> alpha = random_alpha(rng);
      std::vector<Rational> mus = {Rational(0), Rational(1), Rational(-2, 3),
                                   rng.rational(5, 4)};
      std::vector<ModuleParams> ps;
      for (const Rational& mu : mus) ps.push_back(ModuleParams::make(lambda, alpha, mu));
      // t-matrices agree across mu on the full probe grid
      for (long x = -c.opt.range; x <= c.opt.range; ++x)
        for (long y = -c.opt.range; y <= c.opt.range; ++y) {
          LatticeVec r{x, y};
          Matrix base = t_matrix(ps[0], r);
          ++c.report.cases;
          for (std::size_t i = 1; i < ps.size(); ++i)
            if (!(t_matrix(ps[i], r) == base)) {
              c.fail("t-matrix depends on mu",
                     json{{"lambda", lambda},
                          {"alpha", json::array({to_json(alpha[0]), to_json(alpha[1])})},
                          {"mu", to_json(mus[i])},
                          {"r", to_json(r)}});
              return;
            }
        }
      // the Hamiltonian action (through the derivation actions, where mu
      // genuinely appears) is mu-independent
      for (int t = 0; t < c.opt.samples; ++t) {
        LatticeVec r = rng.lattice(c.opt.range);
        std::vector<Rational> coords(lambda + 1);
        for (Rational& x : coords) x = rng.rational(4, 3);
        ModuleVector m = ModuleVector::ket(rng.lattice(3), coords);
        if (m.is_zero()) continue;
        ModuleVector base = Rational(r.x) * act_vec(ps[0], r, 2, m) -
                            Rational(r.y) * act_vec(ps[0], r, 1, m);
        ++c.report.cases;
        for (std::size_t i = 1; i < ps.size(); ++i) {
          ModuleVector other = Rational(r.x) * act_vec(ps[i], r, 2, m) -
                               Rational(r.y) * act_vec(ps[i], r, 1, m);
          if (other != base || act_ham(ps[i], r, m) != base) {
            c.fail("Hamiltonian action depends on mu",
                   json{{"lambda", lambda},
                        {"mu", to_json(mus[i])},
                        {"r", to_json(r)},
                        {"m", to_json(m)}});
            return;
          }
        }
      }
    }
  }
}

}  // namespace

nlohmann::json SuiteReport::to_json() const {
  json fs = json::array();
  for (const SuiteFailure& f : failures)
    fs.push_back(json{{"description", f.description}, {"witness", f.witness}});
  return json{{"suite", suite}, {"cases", cases}, {"failures", std::move(fs)}};
}

std::span<const SuiteInfo> suite_catalog() { return kCatalog; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const SuiteInfo* info = nullptr;
  for (const SuiteInfo& s : kCatalog)
    if (name == s.name) info = &s;
  if (!info) throw Error("unknown suite: " + name);

  Ctx c;
  c.report.suite = name;
  c.opt = options;
  c.opt.samples = value_or(options.samples, info->samples);
  c.opt.max_lambda = value_or(options.max_lambda, info->max_lambda);
  c.opt.max_k = value_or(options.max_k, info->max_k);
  c.opt.range = value_or(options.range, info->range);
  if ((c.opt.samples < 0 && info->samples >= 0) ||
      (c.opt.max_lambda < 0 && info->max_lambda >= 0) ||
      (c.opt.max_k < 1 && info->max_k >= 1) ||
      (c.opt.range < 0 && info->range >= 0))
    throw Error("invalid budget for suite " + name);

  auto start = std::chrono::steady_clock::now();
  if (name == "jacobi") suite_jacobi(c);
  else if (name == "poisson-consistency") suite_poisson(c);
  else if (name == "module-axioms") suite_module_axioms(c);
  else if (name == "t-bracket") suite_t_bracket(c);
  else if (name == "delta-identities") suite_delta_identities(c);
  else if (name == "commutator-identity") suite_commutator_identity(c);
  else if (name == "x-eigen") suite_x_eigen(c);
  else if (name == "sym-power") suite_sym_power(c);
  else if (name == "weight-check") suite_weight_check(c);
  else if (name == "delta3-vanish") suite_delta3_vanish(c);
  else if (name == "mu-independence") suite_mu_independence(c);
  c.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c.report;
}

}  // namespace vla
