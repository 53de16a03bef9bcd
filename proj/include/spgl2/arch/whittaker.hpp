#pragma once

#include <cmath>

#include "spgl2/core.hpp"
#include "spgl2/specfun.hpp"

namespace spgl2::arch {

/// Normalized spherical Whittaker value on the torus:
///   W(a(y)) = 2 |y|^{1/2} K_{ir}(2 pi |y|),  y != 0.
/// Even in y; real for real r.
inline double whittaker_spherical(double r, double y) {
  if (y == 0.0) throw std::domain_error("whittaker_spherical: y must be nonzero");
  const double ay = std::abs(y);
  return 2.0 * std::sqrt(ay) * bessel_K(Complex{0.0, r}, kTwoPi * ay).real();
}

}  // namespace spgl2::arch
