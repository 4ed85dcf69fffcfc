#include "vla/liealg.hpp"

namespace vla {

LieElement LieElement::fun(LatticeVec r) {
  LieElement e;
  e.add_term({BasisSymbol::Kind::Fun, r, 0}, 1);
  return e;
}

LieElement LieElement::vec(LatticeVec r, int axis) {
  LieElement e;
  e.add_term({BasisSymbol::Kind::Vec, r, axis}, 1);
  return e;
}

void LieElement::add_term(const BasisSymbol& sym, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(sym, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [sym, c] : o.terms_) add_term(sym, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [sym, c] : o.terms_) add_term(sym, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [sym, coeff] : terms_) coeff *= c;
  return *this;
}

std::string LieElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [sym, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*";
    if (sym.kind == BasisSymbol::Kind::Fun)
      s += "z^" + to_string(sym.site);
    else
      s += "z^" + to_string(sym.site) + "d" + std::to_string(sym.axis);
  }
  return s;
}

namespace {

// Bracket of two basis symbols, accumulated into `out` with weight `w`.
void bracket_basis(const BasisSymbol& a, const BasisSymbol& b, const Rational& w,
                   LieElement& out) {
  using Kind = BasisSymbol::Kind;
  const LatticeVec sum = a.site + b.site;
  if (a.kind == Kind::Fun && b.kind == Kind::Fun) return;
  if (a.kind == Kind::Vec && b.kind == Kind::Fun) {
    out.add_term({Kind::Fun, sum, 0}, w * Rational(b.site.comp(a.axis)));
    return;
  }
  if (a.kind == Kind::Fun && b.kind == Kind::Vec) {
    out.add_term({Kind::Fun, sum, 0}, -w * Rational(a.site.comp(b.axis)));
    return;
  }
  // [z^r d_k, z^s d_l] = s_k z^{r+s} d_l - r_l z^{r+s} d_k
  out.add_term({Kind::Vec, sum, b.axis}, w * Rational(b.site.comp(a.axis)));
  out.add_term({Kind::Vec, sum, a.axis}, -w * Rational(a.site.comp(b.axis)));
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y) {
  LieElement out;
  for (const auto& [xs, xc] : x.terms())
    for (const auto& [ys, yc] : y.terms()) bracket_basis(xs, ys, xc * yc, out);
  return out;
}

LieElement hamiltonian(LatticeVec r) {
  LieElement e;
  e.add_term({BasisSymbol::Kind::Vec, r, 2}, Rational(r.x));
  e.add_term({BasisSymbol::Kind::Vec, r, 1}, -Rational(r.y));
  return e;
}

LieElement poisson(LatticeVec r, LatticeVec s) {
  LieElement e;
  e.add_term({BasisSymbol::Kind::Fun, r + s, 0}, Rational(det(r, s)));
  return e;
}

LieElement jacobi_residual(const LieElement& x, const LieElement& y,
                           const LieElement& z) {
  return bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
         bracket(z, bracket(x, y));
}

}  // namespace vla
