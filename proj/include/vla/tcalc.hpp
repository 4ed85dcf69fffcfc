#ifndef VLA_TCALC_HPP
#define VLA_TCALC_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "vla/lattice.hpp"
#include "vla/rational.hpp"

namespace vla {

/// Finitely supported combination sum c_u T(u) of the formal degree-zero
/// operators.  T(0) = 0 is folded into the canonical form: the key (0,0) and
/// zero coefficients are never stored.
class TExpression {
 public:
  TExpression() = default;

  static TExpression t(LatticeVec u);

  void add_term(LatticeVec u, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<LatticeVec, Rational>& terms() const { return terms_; }

  TExpression& operator+=(const TExpression& o);
  TExpression& operator-=(const TExpression& o);
  TExpression& operator*=(const Rational& c);
  friend TExpression operator+(TExpression a, const TExpression& b) { return a += b; }
  friend TExpression operator-(TExpression a, const TExpression& b) { return a -= b; }
  friend TExpression operator*(const Rational& c, TExpression a) { return a *= c; }

  friend bool operator==(const TExpression&, const TExpression&) = default;

  std::string str() const;

 private:
  std::map<LatticeVec, Rational> terms_;
};

/// [T(r), T(s)] = det(r,s) {T(r+s) - T(r) - T(s)}, extended bilinearly.
TExpression t_bracket(const TExpression& x, const TExpression& y);

/// The iterated difference D_{u_1} ... D_{u_k} T(r) with D_u T(r) = T(r) -
/// T(r+u): the alternating sum over subsets S of (-1)^|S| T(r + sum_S u_i).
TExpression delta(LatticeVec r, std::span<const LatticeVec> us);

/// Structured record of coeff * Delta_k(base; slots): the unit of the
/// descriptor-level calculus, where reduction by the ideal of higher
/// differences is well defined.
struct DeltaDescriptor {
  Rational coeff;
  LatticeVec base;
  std::vector<LatticeVec> slots;
};

TExpression expand(const DeltaDescriptor& d);
TExpression expand(std::span<const DeltaDescriptor> ds);

/// The commutator [T(r), Delta_k(s; u_1..u_k)] (k >= 2) as descriptors:
///   form 1:  det(s,r) D_{k+1}(s; us, r)
///            + sum_i det(r, u_i) D_k(s + u_i; us \ u_i, r)
///   form 2:  det(s + sum u_i, r) D_{k+1}(s; us, r)
///            + sum_i det(r, u_i) D_k(s; us \ u_i, r)
std::vector<DeltaDescriptor> commutator_rhs_form1(LatticeVec r, LatticeVec s,
                                                  std::span<const LatticeVec> us);
std::vector<DeltaDescriptor> commutator_rhs_form2(LatticeVec r, LatticeVec s,
                                                  std::span<const LatticeVec> us);

struct DeltaCombinatoricsReport {
  TExpression permutation;  // reversal of the slot order
  TExpression sign;         // D_k(r; -u1, ...) + D_k(r - u1; u1, ...)
  TExpression recursion;    // D_{k+1}(r; us, u') - D_k(r; us) + D_k(r+u'; us)
  TExpression additivity;   // first-slot additivity with u'
  bool all_zero() const {
    return permutation.is_zero() && sign.is_zero() && recursion.is_zero() &&
           additivity.is_zero();
  }
};

DeltaCombinatoricsReport verify_delta_combinatorics(LatticeVec r,
                                                    std::span<const LatticeVec> us,
                                                    LatticeVec u_prime);

struct CommutatorIdentityReport {
  TExpression residual_form1;
  TExpression residual_form2;
  bool all_zero() const {
    return residual_form1.is_zero() && residual_form2.is_zero();
  }
};

/// Left side via t_bracket, right sides via difference sums; k >= 2.
CommutatorIdentityReport verify_commutator_identity(LatticeVec r, LatticeVec s,
                                                    std::span<const LatticeVec> us);

/// Residual of X Delta_k(e1; e2^k) against k Delta_k(e1; e2^k), where
/// X = -ad T(-e2) ad T(-e1), computed by two nested t_brackets.
TExpression x_eigen_residual(int k);

/// Homogeneous binary form of fixed degree; coefficient j multiplies
/// X^{degree-j} Y^j.
class BinaryForm {
 public:
  explicit BinaryForm(int degree);

  static BinaryForm linear(LatticeVec u);  // u.x X + u.y Y
  static BinaryForm monomial(int degree, int y_power, const Rational& c);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational& coeff(int y_power) { return coeffs_[y_power]; }

  bool is_zero() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& c);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(const Rational& c, BinaryForm a) { return a *= c; }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  std::string str() const;

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Symmetric-tensor class of a descriptor combination: each record maps to
/// coeff * prod_i (u_{i,x} X + u_{i,y} Y); base points are ignored, which is
/// exactly the reduction modulo the ideal of (k+1)-differences.  Throws
/// DimensionError when a record's slot count differs from k.
BinaryForm sym_class(int k, std::span<const DeltaDescriptor> ds);

struct AdjointSymPowerReport {
  BinaryForm bracket_side;    // via the commutator identity, reduced to degree k
  BinaryForm derivation_side; // slotwise action of the matrix M_r
  bool zero() const { return bracket_side == derivation_side; }
};

/// Compares [T(r), Delta_k(0; us)] reduced modulo (k+1)-differences with the
/// derivation action of M_r = [[-r1 r2, r1^2], [-r2^2, r1 r2]] on the product
/// of the slot forms; k >= 2.
AdjointSymPowerReport adjoint_on_symmetric_power(LatticeVec r,
                                                 std::span<const LatticeVec> us);

struct WeightCheckReport {
  BinaryForm got;
  BinaryForm want;  // (2l - k) X^l Y^{k-l}
  bool zero() const { return got == want; }
};

/// [T(e1) + T(e2) - T(e1+e2), Delta_k(0; e1^l, e2^{k-l})] reduced modulo
/// (k+1)-differences and re-based to 0, against (2l-k) X^l Y^{k-l}.
WeightCheckReport weight_check(int k, int l);

}  // namespace vla

#endif
