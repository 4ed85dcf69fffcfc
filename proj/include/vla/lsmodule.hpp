#ifndef VLA_LSMODULE_HPP
#define VLA_LSMODULE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vla/lattice.hpp"
#include "vla/liealg.hpp"
#include "vla/matrix.hpp"
#include "vla/sl2.hpp"

namespace vla {

/// Parameters of the module A (x) V(lambda): highest weight, the shift
/// alpha = (alpha_1, alpha_2), the derivation parameter mu, and the acting
/// sl2 triple on the fiber.
struct ModuleParams {
  unsigned lambda = 0;
  std::array<Rational, 2> alpha{};
  Rational mu = 0;
  Sl2Triple triple;

  static ModuleParams make(unsigned lambda, std::array<Rational, 2> alpha,
                           Rational mu) {
    return {lambda, std::move(alpha), std::move(mu), build_irrep(lambda)};
  }
  /// Same parameters but an arbitrary fiber action; used by mutation tests.
  static ModuleParams with_triple(unsigned lambda, std::array<Rational, 2> alpha,
                                  Rational mu, Sl2Triple triple) {
    return {lambda, std::move(alpha), std::move(mu), std::move(triple)};
  }
};

/// Finitely supported map degree -> fiber coordinate vector.  Degrees whose
/// vector is identically zero are never stored, so support is canonical and
/// always finite; no truncation window exists.
class ModuleVector {
 public:
  ModuleVector() = default;

  /// |v, s> with coordinate vector v at degree s.
  static ModuleVector ket(LatticeVec degree, std::vector<Rational> coords);

  void add(LatticeVec degree, const std::vector<Rational>& coords);

  bool is_zero() const { return support_.empty(); }
  const std::map<LatticeVec, std::vector<Rational>>& support() const {
    return support_;
  }

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  ModuleVector& operator*=(const Rational& c);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  friend ModuleVector operator*(const Rational& c, ModuleVector a) { return a *= c; }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

  std::string str() const;

 private:
  std::map<LatticeVec, std::vector<Rational>> support_;
};

/// z^r |v, s> = |v, r+s>.
ModuleVector act_fun(const ModuleParams& p, LatticeVec r, const ModuleVector& m);

/// z^r d_1 |v,s> = |(s_1 + a_1 + r_1 mu + r_2 F + (r_1/2) H) v, r+s>,
/// z^r d_2 |v,s> = |(s_2 + a_2 + r_2 mu + r_1 E - (r_2/2) H) v, r+s>.
ModuleVector act_vec(const ModuleParams& p, LatticeVec r, int axis,
                     const ModuleVector& m);

/// H(r) |v,s> = |(det(r, s+alpha) + r_1^2 E - r_2^2 F - r_1 r_2 H) v, r+s>,
/// with det extended bilinearly to the rational second argument.
ModuleVector act_ham(const ModuleParams& p, LatticeVec r, const ModuleVector& m);

/// Action of a general element of the semidirect sum, term by term.
ModuleVector act_element(const ModuleParams& p, const LieElement& x,
                         const ModuleVector& m);

/// T(r) = z^{-r} H(r) restricted to the degree-zero slice:
/// det(r, alpha) I + r_1^2 E - r_2^2 F - r_1 r_2 H.
Matrix t_matrix(const ModuleParams& p, LatticeVec r);

struct AxiomFailure {
  std::string axiom;
  LatticeVec r, s;
  ModuleVector m;
  std::string detail;
};

struct AxiomReport {
  long long cases_run = 0;
  std::optional<AxiomFailure> first_failure;
  bool passed() const { return !first_failure.has_value(); }
};

/// Checks the graded-module axioms on seeded random samples: associativity
/// and commutativity of the z^r action, the unit action, the two commutator
/// compatibilities of H(r), degree grading, the Hamiltonian/derivation
/// consistency H(r) = r_1 (z^r d_2) - r_2 (z^r d_1), and commutator
/// compatibility of the z^r d_k action.  Stops at the first counterexample.
AxiomReport verify_module_axioms(const ModuleParams& p, int sample_budget,
                                 std::uint64_t seed);

}  // namespace vla

#endif
