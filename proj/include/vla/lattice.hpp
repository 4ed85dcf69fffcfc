#ifndef VLA_LATTICE_HPP
#define VLA_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace vla {

/// Element of the rank-2 grading lattice.
struct LatticeVec {
  long x = 0;
  long y = 0;

  friend constexpr LatticeVec operator+(LatticeVec a, LatticeVec b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr LatticeVec operator-(LatticeVec a, LatticeVec b) {
    return {a.x - b.x, a.y - b.y};
  }
  constexpr LatticeVec operator-() const { return {-x, -y}; }
  friend constexpr LatticeVec operator*(long c, LatticeVec v) {
    return {c * v.x, c * v.y};
  }
  constexpr bool is_zero() const { return x == 0 && y == 0; }
  /// Component by axis index (1 or 2).
  constexpr long comp(int axis) const { return axis == 1 ? x : y; }

  friend constexpr auto operator<=>(const LatticeVec&, const LatticeVec&) = default;
};

inline constexpr LatticeVec kE1{1, 0};
inline constexpr LatticeVec kE2{0, 1};

constexpr long det(LatticeVec r, LatticeVec s) { return r.x * s.y - r.y * s.x; }

/// 2x2 integer matrix acting on the lattice, row-major.
struct IntMat2 {
  long a = 1, b = 0, c = 0, d = 1;
  constexpr LatticeVec apply(LatticeVec u) const {
    return {a * u.x + b * u.y, c * u.x + d * u.y};
  }
};

inline std::string to_string(LatticeVec v) {
  return "[" + std::to_string(v.x) + "," + std::to_string(v.y) + "]";
}

}  // namespace vla

#endif
