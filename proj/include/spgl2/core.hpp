#pragma once

#include <complex>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spgl2 {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kLogPi = 1.14472988584940017414342735135305871;
inline constexpr double kLog2 = 0.693147180559945309417232121458176568;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kZeta3 = 1.20205690315959428539973816151144999;

inline constexpr Complex kI{0.0, 1.0};

/// Thrown when an argument hits a pole of a gamma-type factor.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a contour abscissa leaves the declared holomorphy strip.
class strip_error : public std::domain_error {
 public:
  explicit strip_error(const std::string& what) : std::domain_error(what) {}
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// True if z is within eps of a non-positive integer (pole lattice of Gamma).
inline bool near_nonpositive_integer(Complex z, double eps = 1e-13) {
  if (z.real() > 0.5 || std::abs(z.imag()) > eps) return false;
  return std::abs(z.real() - std::round(z.real())) <= eps;
}

inline double sgn_pow(double x, int delta) {
  return (delta != 0 && x < 0) ? -1.0 : 1.0;
}

}  // namespace spgl2
