#pragma once

#include <cmath>

namespace qkr {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// Neumaier-compensated accumulator. Moment sums over 2^17 grid points must
/// cancel to ~1e-16 relative for the coherent-state degeneracy test.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value))
      comp += (sum - t) + value;
    else
      comp += (value - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

/// Reduce an angle to [0, 2pi).
inline double wrap_two_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

/// Reduce an angle to [-pi, pi).
inline double wrap_pi(double x) {
  double r = wrap_two_pi(x);
  return r >= pi ? r - two_pi : r;
}

/// Distance between two angles on the circle, in [0, pi].
inline double circular_distance(double a, double b) {
  return std::abs(wrap_pi(a - b));
}

}  // namespace qkr
