#include "vla/tcalc.hpp"

#include <algorithm>

#include "vla/errors.hpp"

namespace vla {

TExpression TExpression::t(LatticeVec u) {
  TExpression e;
  e.add_term(u, 1);
  return e;
}

void TExpression::add_term(LatticeVec u, const Rational& coeff) {
  if (coeff == 0 || u.is_zero()) return;  // T(0) = 0
  auto [it, inserted] = terms_.emplace(u, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TExpression& TExpression::operator+=(const TExpression& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, c);
  return *this;
}

TExpression& TExpression::operator-=(const TExpression& o) {
  for (const auto& [u, c] : o.terms_) add_term(u, -c);
  return *this;
}

TExpression& TExpression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [u, coeff] : terms_) coeff *= c;
  return *this;
}

std::string TExpression::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [u, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*T" + to_string(u);
  }
  return s;
}

TExpression t_bracket(const TExpression& x, const TExpression& y) {
  TExpression out;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      Rational d(det(u, v));
      if (d == 0) continue;
      Rational c = cu * cv * d;
      out.add_term(u + v, c);
      out.add_term(u, -c);
      out.add_term(v, -c);
    }
  return out;
}

TExpression delta(LatticeVec r, std::span<const LatticeVec> us) {
  const std::size_t k = us.size();
  TExpression out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    LatticeVec shift = r;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        shift = shift + us[i];
        ++bits;
      }
    out.add_term(shift, bits % 2 ? -1 : 1);
  }
  return out;
}

TExpression expand(const DeltaDescriptor& d) {
  TExpression e = delta(d.base, d.slots);
  e *= d.coeff;
  return e;
}

TExpression expand(std::span<const DeltaDescriptor> ds) {
  TExpression e;
  for (const DeltaDescriptor& d : ds) e += expand(d);
  return e;
}

namespace {

std::vector<LatticeVec> drop_slot(std::span<const LatticeVec> us, std::size_t i,
                                  LatticeVec appended) {
  std::vector<LatticeVec> rest;
  rest.reserve(us.size());
  for (std::size_t j = 0; j < us.size(); ++j)
    if (j != i) rest.push_back(us[j]);
  rest.push_back(appended);
  return rest;
}

}  // namespace

std::vector<DeltaDescriptor> commutator_rhs_form1(LatticeVec r, LatticeVec s,
                                                  std::span<const LatticeVec> us) {
  std::vector<DeltaDescriptor> out;
  std::vector<LatticeVec> extended(us.begin(), us.end());
  extended.push_back(r);
  out.push_back({Rational(det(s, r)), s, extended});
  for (std::size_t i = 0; i < us.size(); ++i)
    out.push_back({Rational(det(r, us[i])), s + us[i], drop_slot(us, i, r)});
  return out;
}

std::vector<DeltaDescriptor> commutator_rhs_form2(LatticeVec r, LatticeVec s,
                                                  std::span<const LatticeVec> us) {
  std::vector<DeltaDescriptor> out;
  LatticeVec total = s;
  for (LatticeVec u : us) total = total + u;
  std::vector<LatticeVec> extended(us.begin(), us.end());
  extended.push_back(r);
  out.push_back({Rational(det(total, r)), s, extended});
  for (std::size_t i = 0; i < us.size(); ++i)
    out.push_back({Rational(det(r, us[i])), s, drop_slot(us, i, r)});
  return out;
}

DeltaCombinatoricsReport verify_delta_combinatorics(LatticeVec r,
                                                    std::span<const LatticeVec> us,
                                                    LatticeVec u_prime) {
  DeltaCombinatoricsReport rep;
  std::vector<LatticeVec> v(us.begin(), us.end());

  std::vector<LatticeVec> reversed(v.rbegin(), v.rend());
  rep.permutation = delta(r, v) - delta(r, reversed);

  std::vector<LatticeVec> negated = v;
  negated[0] = -negated[0];
  rep.sign = delta(r, negated) + delta(r - v[0], v);

  std::vector<LatticeVec> extended = v;
  extended.push_back(u_prime);
  rep.recursion = delta(r, extended) - delta(r, v) + delta(r + u_prime, v);

  std::vector<LatticeVec> summed = v;
  summed[0] = summed[0] + u_prime;
  std::vector<LatticeVec> primed = v;
  primed[0] = u_prime;
  rep.additivity = delta(r, summed) - delta(r, v) - delta(r + v[0], primed);

  return rep;
}

CommutatorIdentityReport verify_commutator_identity(LatticeVec r, LatticeVec s,
                                                    std::span<const LatticeVec> us) {
  if (us.size() < 2) throw Error("commutator identity requires k >= 2");
  TExpression lhs = t_bracket(TExpression::t(r), delta(s, us));
  auto f1 = commutator_rhs_form1(r, s, us);
  auto f2 = commutator_rhs_form2(r, s, us);
  return {lhs - expand(f1), lhs - expand(f2)};
}

TExpression x_eigen_residual(int k) {
  if (k < 1) throw Error("x_eigen_residual requires k >= 1");
  std::vector<LatticeVec> slots(static_cast<std::size_t>(k), kE2);
  TExpression d = delta(kE1, slots);
  TExpression xd = t_bracket(TExpression::t(-kE2), t_bracket(TExpression::t(-kE1), d));
  xd *= -1;
  return xd - Rational(k) * d;
}

BinaryForm::BinaryForm(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(degree) + 1) {
  if (degree < 0) throw Error("binary form degree must be nonnegative");
}

BinaryForm BinaryForm::linear(LatticeVec u) {
  BinaryForm f(1);
  f.coeffs_[0] = Rational(u.x);
  f.coeffs_[1] = Rational(u.y);
  return f;
}

BinaryForm BinaryForm::monomial(int degree, int y_power, const Rational& c) {
  BinaryForm f(degree);
  f.coeffs_[static_cast<std::size_t>(y_power)] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (degree_ != o.degree_) throw DimensionError("binary form degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (degree_ != o.degree_) throw DimensionError("binary form degree mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) x *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm out(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

std::string BinaryForm::str() const {
  std::string s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_string(coeffs_[j]);
    int xp = degree_ - static_cast<int>(j);
    if (xp > 0) s += "*X^" + std::to_string(xp);
    if (j > 0) s += "*Y^" + std::to_string(j);
  }
  return s.empty() ? "0" : s;
}

BinaryForm sym_class(int k, std::span<const DeltaDescriptor> ds) {
  BinaryForm out(k);
  for (const DeltaDescriptor& d : ds) {
    if (static_cast<int>(d.slots.size()) != k)
      throw DimensionError("descriptor slot count differs from k");
    BinaryForm prod = BinaryForm::monomial(0, 0, d.coeff);
    for (LatticeVec u : d.slots) prod = prod * BinaryForm::linear(u);
    out += prod;
  }
  return out;
}

AdjointSymPowerReport adjoint_on_symmetric_power(LatticeVec r,
                                                 std::span<const LatticeVec> us) {
  const int k = static_cast<int>(us.size());
  if (k < 2) throw Error("adjoint_on_symmetric_power requires k >= 2");

  // Bracket side: the commutator identity at base 0, with the (k+1)-slot
  // descriptor discarded (it lies in the ideal of higher differences).
  std::vector<DeltaDescriptor> rhs = commutator_rhs_form2(r, {0, 0}, us);
  std::vector<DeltaDescriptor> surviving;
  for (DeltaDescriptor& d : rhs) {
    if (static_cast<int>(d.slots.size()) != k) continue;
    d.base = {0, 0};
    surviving.push_back(std::move(d));
  }
  BinaryForm bracket_side = sym_class(k, surviving);

  // Derivation side: replace each slot in turn by M_r u_i, M_r applied as an
  // actual integral matrix.
  IntMat2 m{-r.x * r.y, r.x * r.x, -r.y * r.y, r.x * r.y};
  BinaryForm derivation_side(k);
  for (std::size_t i = 0; i < us.size(); ++i) {
    BinaryForm prod = BinaryForm::monomial(0, 0, 1);
    for (std::size_t j = 0; j < us.size(); ++j)
      prod = prod * BinaryForm::linear(j == i ? m.apply(us[j]) : us[j]);
    derivation_side += prod;
  }
  return {std::move(bracket_side), std::move(derivation_side)};
}

WeightCheckReport weight_check(int k, int l) {
  if (k < 2 || l < 0 || l > k) throw Error("weight_check requires 0 <= l <= k, k >= 2");
  std::vector<LatticeVec> slots;
  slots.insert(slots.end(), static_cast<std::size_t>(l), kE1);
  slots.insert(slots.end(), static_cast<std::size_t>(k - l), kE2);

  std::vector<DeltaDescriptor> reduced;
  const std::pair<Rational, LatticeVec> ops[] = {
      {1, kE1}, {1, kE2}, {-1, kE1 + kE2}};
  for (const auto& [weight, r] : ops) {
    for (DeltaDescriptor& d : commutator_rhs_form2(r, {0, 0}, slots)) {
      if (static_cast<int>(d.slots.size()) != k) continue;  // drop higher differences
      d.base = {0, 0};
      d.coeff *= weight;
      reduced.push_back(std::move(d));
    }
  }
  BinaryForm got = sym_class(k, reduced);
  BinaryForm want = BinaryForm::monomial(k, k - l, Rational(2 * l - k));
  return {std::move(got), std::move(want)};
}

}  // namespace vla
