#ifndef VLA_IDENTIFY_HPP
#define VLA_IDENTIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "vla/lattice.hpp"
#include "vla/matrix.hpp"
#include "vla/sl2.hpp"

namespace vla {

/// Black-box family of degree-zero operator matrices r -> T(r).  Either a
/// total function or a finite sample table; eval(0) is always the zero
/// matrix.  The bracket relation is audited by identify(), never assumed.
class TRealization {
 public:
  static TRealization from_function(std::size_t dim,
                                    std::function<Matrix(LatticeVec)> eval);
  static TRealization from_samples(std::size_t dim,
                                   std::map<LatticeVec, Matrix> samples);

  std::size_t dim() const { return dim_; }
  bool sampled() const { return sampled_; }
  bool has(LatticeVec r) const;
  Matrix eval(LatticeVec r) const;  // throws Error when unavailable
  /// Sample points of a table-backed realization (empty for functional).
  const std::vector<LatticeVec>& known_points() const { return points_; }

 private:
  std::size_t dim_ = 0;
  bool sampled_ = false;
  std::function<Matrix(LatticeVec)> eval_;
  std::function<bool(LatticeVec)> has_;
  std::vector<LatticeVec> points_;
};

/// The lattice-basis-change automorphism: u -> det(r,s) T(u_1 r + u_2 s).
/// Throws NonUnimodularError unless det(r,s) = +-1.
TRealization degree_transform(LatticeVec r, LatticeVec s, const TRealization& real);

/// tau_1 = (T(e1) - T(-e1))/2 and tau_2 = (T(e2) - T(-e2))/2, each required
/// to be a scalar multiple of the identity.  Throws NonScalarTauError.
std::pair<Rational, Rational> extract_taus(const TRealization& real);

/// e = T(e1) - tau_1, f = -(T(e2) - tau_2), h = T(e1) + T(e2) - T(e1+e2);
/// validates the Chevalley relations and nilpotency of e, f.
/// Throws NotSl2TripleError.
Sl2Triple extract_triple(const TRealization& real, const Rational& tau1,
                         const Rational& tau2);

struct IdentificationResult {
  std::array<Rational, 2> alpha;
  unsigned lambda = 0;
  Rational tau1, tau2;
  Sl2Triple triple;            // in the input basis
  Matrix change_of_basis;      // conjugates triple to the standard irrep
};

/// Full classification pipeline: bracket audit on probes, tau extraction,
/// Chevalley triple extraction, commutant (Schur) check, highest weight,
/// alpha = (-tau_2, tau_1), change of basis through a highest-weight vector,
/// and the final quadratic-form audit
///   eval(r) = r_1 tau_1 + r_2 tau_2 + r_1^2 E - r_2^2 F - r_1 r_2 H
/// on every probe.  probe_budget bounds the number of extra random probes
/// (functional realizations) and of random audit pairs.
IdentificationResult identify(const TRealization& real, int probe_budget,
                              std::uint64_t seed);

struct NilpotencyReport {
  Matrix premise_residual;  // [D, E] - delta E
  Matrix power_residual;    // E^n
  bool premise_ok() const { return premise_residual.is_zero(); }
  bool nilpotent() const { return power_residual.is_zero(); }
};

/// Witness for "[D,E] = delta E with delta != 0 forces E nilpotent".
/// Rejects delta = 0.
NilpotencyReport nilpotency_witness(const Matrix& d, const Matrix& e,
                                    const Rational& delta);

}  // namespace vla

#endif
