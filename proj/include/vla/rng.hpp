#ifndef VLA_RNG_HPP
#define VLA_RNG_HPP

#include <cstdint>

#include "vla/lattice.hpp"
#include "vla/rational.hpp"

namespace vla {

/// Deterministic pseudo-random generator (SplitMix64).  The generator and
/// all derived samplers below are pinned to this exact bit-level recipe so
/// that seeds reproduce identical sample streams on every platform; failure
/// witnesses carry a seed and replay exactly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], by reduction of next() modulo the range.
  long long uniform(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  LatticeVec lattice(long long range) {
    long x = static_cast<long>(uniform(-range, range));
    long y = static_cast<long>(uniform(-range, range));
    return {x, y};
  }

  LatticeVec nonzero_lattice(long long range) {
    LatticeVec v = lattice(range);
    while (v.is_zero()) v = lattice(range);
    return v;
  }

  /// Random rational with numerator in [-num_range, num_range] and
  /// denominator in [1, den_range].
  Rational rational(long long num_range, long long den_range) {
    long long n = uniform(-num_range, num_range);
    long long d = uniform(1, den_range);
    return vla::rational(n, d);
  }

 private:
  std::uint64_t state_;
};

}  // namespace vla

#endif
