#include <catch2/catch_amalgamated.hpp>

#include "reference_values.hpp"
#include "spgl2/arch/kernel.hpp"

using namespace spgl2;
using namespace spgl2::arch;

namespace {
double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1e-300, std::abs(b));
}
}  // namespace

TEST_CASE("kernel values against the high-precision references") {
  CHECK(rel_err(kernel_K(Complex{1.0, 0.0}, 1.0), ref::kKernel_1_1) < 1e-11);
  CHECK(rel_err(kernel_K(Complex{2.3, 0.0}, 0.7), ref::kKernel_2p3_0p7) < 1e-11);
  CHECK(rel_err(kernel_K(Complex{1.0, 0.0}, 10.0), ref::kKernel_1_10) < 1e-11);
}

TEST_CASE("kernel decay at large y") {
  const Complex k = kernel_K(Complex{1.0, 0.0}, 1e6);
  CHECK(rel_err(k, ref::kKernel_1_1e6_abs * (k.real() < 0 ? -1.0 : 1.0)) < 1e-9);
  CHECK(std::abs(k) <= 1e-2);
}

TEST_CASE("conjugation symmetry in t") {
  const Complex a = kernel_K(Complex{2.3, 0.0}, 0.7);
  const Complex b = kernel_K(Complex{-2.3, 0.0}, 0.7);
  CHECK(std::abs(b - std::conj(a)) <= 1e-12 * std::abs(a));
}

TEST_CASE("removable singularity at t = 0") {
  // Taylor path against the reference at t = 1e-4 and the limit value
  CHECK(rel_err(kernel_K(Complex{1e-4, 0.0}, 0.8), ref::kKernel_tiny_t) < 1e-11);
  CHECK(rel_err(kernel_K(Complex{0.0, 0.0}, 0.8), ref::kKernel_t0) < 1e-11);
  // continuity across the path switch at |t| = 1e-3 (the order-t^2
  // term itself moves by ~4e-3 of its size between the two points)
  const Complex below = kernel_K(Complex{0.999e-3, 0.0}, 0.8);
  const Complex above = kernel_K(Complex{1.001e-3, 0.0}, 0.8);
  CHECK(std::abs(below - above) < 1e-6 * std::abs(above));
  // the same on a far-negative hypergeometric argument (small y)
  const Complex b2 = kernel_K(Complex{0.999e-3, 0.0}, 0.05);
  const Complex a2 = kernel_K(Complex{1.001e-3, 0.0}, 0.05);
  CHECK(std::abs(b2 - a2) < 1e-6 * std::abs(a2));
}

TEST_CASE("kernel preconditions") {
  CHECK_THROWS_AS(kernel_K(Complex{1.0, 0.0}, -2.0), std::domain_error);
  CHECK_THROWS_AS(kernel_K(Complex{1.0, 0.6}, 1.0), pole_error);
}

TEST_CASE("residue kernel closed form vs contour reference") {
  CHECK(rel_err(residue_kernel(1.0, 0.5), ref::kResKernel_1_half) < 1e-10);
  CHECK(rel_err(residue_kernel(1.0, 0.5), ref::kResKernelContour_1_half) < 1e-10);
}

TEST_CASE("residue kernel small-t envelope") {
  // F(...,0) = 1 makes the bound exact in the limit:
  // |kernel| * sqrt(t) <= 4 |Gamma(1/2+ir)^2/Gamma(1+2ir)| |1 + i/sinh(pi r)|
  const double r = 2.0, t = 1e-6;
  const Complex g = std::exp(2.0 * log_gamma(Complex{0.5, r}) -
                             log_gamma(Complex{1.0, 2.0 * r}));
  const double bound =
      4.0 * std::abs(g) * std::abs(1.0 + kI / std::sinh(kPi * r));
  CHECK(std::abs(residue_kernel(r, t)) * std::sqrt(t) <= bound * (1.0 + 1e-6));
}

TEST_CASE("residue kernel r -> -r symmetry") {
  const Complex p = residue_kernel(3.0, 0.3);
  const Complex m = residue_kernel(-3.0, 0.3);
  CHECK(std::abs(p - m) <= 1e-12 * std::abs(p));
}

TEST_CASE("residue kernel r = 0 removable path") {
  const Complex at0 = residue_kernel(0.0, 0.4);
  const Complex near0 = residue_kernel(5e-4, 0.4);
  CHECK(std::abs(at0 - near0) < 1e-4 * std::abs(at0));
  const Complex below = residue_kernel(0.999e-3, 0.4);
  const Complex above = residue_kernel(1.001e-3, 0.4);
  CHECK(std::abs(below - above) < 1e-6 * std::abs(above));
}

TEST_CASE("negated-argument companion matches the 9.131.1 relation") {
  // sum_pm t^{-1/2 pm ir} (...) F(..., -t)
  //   = (1+t)^{-1} sum_pm (t/(1+t))^{-1/2 pm ir} (...) F(..., t/(1+t))
  for (double t : {0.3, 0.9, 1.7}) {
    const double r = 1.3;
    const Complex lhs = residue_kernel_neg(r, t);
    const Complex rhs = residue_kernel(r, t / (1.0 + t)) / (1.0 + t);
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(rhs));
  }
}
