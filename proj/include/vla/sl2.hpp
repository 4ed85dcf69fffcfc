#ifndef VLA_SL2_HPP
#define VLA_SL2_HPP

#include <array>
#include <span>

#include "vla/matrix.hpp"

namespace vla {

/// A candidate Chevalley triple.  Instances produced by build_irrep satisfy
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H; arbitrary matrices may be assembled
/// directly (e.g. for negative tests) and checked via chevalley_residuals.
struct Sl2Triple {
  std::size_t dim = 0;
  Matrix E, F, H;
};

/// The (lambda+1)-dimensional simple module in the basis v_0..v_lambda with
///   H v_i = (lambda - 2i) v_i,  F v_i = v_{i+1},  E v_i = i(lambda-i+1) v_{i-1}.
/// All entries are integers under this convention.
Sl2Triple build_irrep(unsigned lambda);

/// ([H,E] - 2E, [H,F] + 2F, [E,F] - H); all zero iff t is an sl2 triple.
std::array<Matrix, 3> chevalley_residuals(const Sl2Triple& t);

bool is_sl2_triple(const Sl2Triple& t);

/// Largest eigenvalue of H, validated to be the top of an unbroken
/// multiplicity-one weight string lambda, lambda-2, ..., -lambda.
/// Throws NotSemisimpleHError / NotIrreducibleError otherwise.
unsigned highest_weight_of(const Sl2Triple& t);

/// Dimension of {X : [X, M_i] = 0 for all i}, i.e. the null space of the
/// stacked commutator system.  When some M_i has the distinct-integer
/// spectrum of an irreducible weight operator the solve happens in its
/// eigenbasis, where the system is diagonal; otherwise the stacked system
/// is eliminated directly.  Both routes compute the same exact dimension.
std::size_t commutant_dimension(std::span<const Matrix> mats);

}  // namespace vla

#endif
