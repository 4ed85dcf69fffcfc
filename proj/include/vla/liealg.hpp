#ifndef VLA_LIEALG_HPP
#define VLA_LIEALG_HPP

#include <compare>
#include <map>
#include <string>

#include "vla/lattice.hpp"
#include "vla/rational.hpp"

namespace vla {

/// Basis symbol of the semidirect sum of the Laurent algebra with its
/// derivation algebra: Fun(r) is the monomial z^r, Vec(r, k) is z^r d_k.
struct BasisSymbol {
  enum class Kind { Fun = 0, Vec = 1 };
  Kind kind = Kind::Fun;
  LatticeVec site;
  int axis = 0;  // 1 or 2 for Vec, 0 for Fun

  friend constexpr auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Finitely supported rational combination of basis symbols, kept canonical:
/// zero coefficients are never stored, so equality is map equality and the
/// serialized form is unique.
class LieElement {
 public:
  LieElement() = default;

  static LieElement fun(LatticeVec r);
  static LieElement vec(LatticeVec r, int axis);

  void add_term(const BasisSymbol& sym, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisSymbol, Rational>& terms() const { return terms_; }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string str() const;

 private:
  std::map<BasisSymbol, Rational> terms_;
};

/// Structure-constant bracket, extended bilinearly:
///   [z^r d_k, z^s d_l] = z^{r+s} (s_k d_l - r_l d_k)
///   [z^r d_k, z^s]     = s_k z^{r+s}
///   [z^r, z^s]         = 0
LieElement bracket(const LieElement& x, const LieElement& y);

/// H(r) = z^r (r_1 d_2 - r_2 d_1), stored expanded in the Vec basis.
LieElement hamiltonian(LatticeVec r);

/// Algebraic Poisson bracket of two monomials: det(r, s) z^{r+s}.
LieElement poisson(LatticeVec r, LatticeVec s);

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero iff the triple satisfies Jacobi.
LieElement jacobi_residual(const LieElement& x, const LieElement& y, const LieElement& z);

}  // namespace vla

#endif
