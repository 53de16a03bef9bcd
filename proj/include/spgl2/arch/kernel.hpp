#pragma once

#include <cmath>

#include "spgl2/core.hpp"
#include "spgl2/specfun.hpp"

namespace spgl2::arch {

namespace detail {

/// Series values F, F', F'', F''' of t |-> 2F1(1/2+it, 1/2+it; 1+2it; z)
/// at t = 0. Parameter derivatives accumulate digamma-type partial sums
/// alongside the terms.
struct HypDerivs {
  Complex f0{0, 0}, f1{0, 0}, f2{0, 0}, f3{0, 0};
};

inline HypDerivs hyp_half_derivs(double z, int max_terms = 200000) {
  HypDerivs out;
  double cn = 1.0;  // [(1/2)_n / n!]^2
  double Sa1 = 0.0, Sc1 = 0.0, Sa2 = 0.0, Sc2 = 0.0, Sa3 = 0.0, Sc3 = 0.0;
  double zn = 1.0;
  CompensatedComplexSum F0, F1, F2, F3;
  for (int n = 0;; ++n) {
    const double alpha = 2.0 * (Sa1 - Sc1);   // u' = i alpha
    const double beta = 2.0 * Sa2 - 4.0 * Sc2;  // u'' = beta
    const double gamma3 = -4.0 * Sa3 + 16.0 * Sc3;  // u''' = i gamma3
    const double term = cn * zn;
    F0.add(Complex{term, 0.0});
    F1.add(Complex{0.0, term * alpha});
    F2.add(Complex{term * (beta - alpha * alpha), 0.0});
    F3.add(Complex{0.0, term * (-alpha * alpha * alpha + 3.0 * alpha * beta + gamma3)});
    if (n > 4 && std::abs(term) * (1.0 + std::abs(alpha) + std::abs(beta)) *
                     (1.0 + std::abs(alpha) * std::abs(alpha)) <
                 1e-18 * (1.0 + std::abs(F0.value()))) {
      break;
    }
    if (n >= max_terms) {
      throw std::runtime_error("hyp_half_derivs: series did not converge");
    }
    const double aj = n + 0.5, cj = n + 1.0;
    cn *= (aj * aj) / (cj * (n + 1.0));
    zn *= z;
    Sa1 += 1.0 / aj;
    Sc1 += 1.0 / cj;
    Sa2 += 1.0 / (aj * aj);
    Sc2 += 1.0 / (cj * cj);
    Sa3 += 1.0 / (aj * aj * aj);
    Sc3 += 1.0 / (cj * cj * cj);
  }
  out.f0 = F0.value();
  out.f1 = F1.value();
  out.f2 = F2.value();
  out.f3 = F3.value();
  return out;
}

}  // namespace detail

/// S(t) = (1/2) sum_pm (1 pm i/sinh(pi t)) A(pm t) with
///   A(s) = e^{i s L} Gamma(1/2+is)^2 / Gamma(1+2is)
///          * 2F1(1/2+is, 1/2+is; 1+2is; z),
/// z real < 1. The pm sum has a removable singularity at t = 0: each
/// term blows up like 1/sinh but the odd parts cancel, so for
/// |t| < 1e-3 the combination is evaluated from the order-3 Taylor
/// expansion of A at 0 (psi-values at 1/2 and 1 are closed forms).
inline Complex pm_combined(Complex t, double L, double z) {
  if (std::abs(t) < 1e-3) {
    // Pfaff step keeps the derivative series convergent for z < -0.6:
    // A picks up (1-z)^{-1/2-it}, i.e. L -> L - log(1-z), z -> z/(z-1).
    double pref = 1.0;
    if (z < -0.6) {
      pref = 1.0 / std::sqrt(1.0 - z);
      L -= std::log(1.0 - z);
      z = z / (z - 1.0);
    }
    const auto d = detail::hyp_half_derivs(z);
    const double l2 = L - 4.0 * kLog2;
    const Complex g1{0.0, l2};                    // g'(0)
    const double g2 = -kPi * kPi / 3.0;           // g''(0)
    const Complex g3{0.0, 12.0 * kZeta3};         // g'''(0)
    const Complex A0 = kPi * d.f0;
    const Complex A1 = kPi * (g1 * d.f0 + d.f1);
    const Complex A2 = kPi * ((g2 + g1 * g1) * d.f0 + 2.0 * g1 * d.f1 + d.f2);
    const Complex A3 = kPi * ((g3 + 3.0 * g1 * g2 + g1 * g1 * g1) * d.f0 +
                              3.0 * (g2 + g1 * g1) * d.f1 + 3.0 * g1 * d.f2 +
                              d.f3);
    const Complex t2 = t * t;
    Complex val = (A0 + kI * A1 / kPi) +
                  t2 * (0.5 * A2 + (kI / kPi) * (A3 - A1 * kPi * kPi) / 6.0);
    return pref * val;
  }
  auto A = [&](Complex s) {
    const Complex a = 0.5 + kI * s;
    const Complex c = 1.0 + 2.0 * kI * s;
    const Complex lg = 2.0 * log_gamma(a) - log_gamma(c);
    return std::exp(kI * s * L + lg) * hyp2f1(a, a, c, Complex{z, 0.0});
  };
  const Complex inv_sinh = 1.0 / std::sinh(kPi * t);
  if (t.imag() == 0.0) {
    const Complex Ap = A(t);  // A(-t) = conj(A(t)) for real t
    return Complex{Ap.real() - Ap.imag() * inv_sinh.real(), 0.0};
  }
  return 0.5 * ((1.0 + kI * inv_sinh) * A(t) + (1.0 - kI * inv_sinh) * A(-t));
}

/// The hypergeometric kernel
///   K(t,y) = (1/2) sum_pm (1 pm i/sinh(pi t)) y^{-1/2 -+ it}
///            Gamma(1/2 pm it)^2/Gamma(1 pm 2it)
///            F(1/2 pm it, 1/2 pm it, 1 pm 2it, -1/y),  y > 0.
/// Real and even in t for real t.
inline Complex kernel_K(Complex t, double y) {
  if (y <= 0.0) throw std::domain_error("kernel_K: y must be positive");
  if (std::abs(t.imag()) >= 0.5) {
    throw pole_error("kernel_K: |Im t| must be < 1/2");
  }
  return pm_combined(t, -std::log(y), -1.0 / y) / std::sqrt(y);
}

/// Closed-form value of the shifted contour integral
/// int_{(3/4)} t^{-s} G(s) ds/(2 pi i) for 0 < t < 1:
///   2 sum_pm t^{-1/2 pm ir} (1 pm i/sinh(pi r))
///     Gamma(1/2 pm ir)^2/Gamma(1 pm 2ir) F(1/2 pm ir, 1/2 pm ir, 1 pm 2ir, t).
inline Complex residue_kernel(double r, double t) {
  if (t <= 0.0 || t >= 1.0) {
    throw std::domain_error("residue_kernel: need t in (0,1)");
  }
  return 4.0 / std::sqrt(t) * pm_combined(Complex{r, 0.0}, std::log(t), t);
}

/// Companion form with negated hypergeometric argument,
///   2 sum_pm t^{-1/2 pm ir} (...) F(..., -t),  t > 0,
/// which is what the region beyond the unit interval reduces to.
inline Complex residue_kernel_neg(double r, double t) {
  if (t <= 0.0) throw std::domain_error("residue_kernel_neg: need t > 0");
  return 4.0 / std::sqrt(t) * pm_combined(Complex{r, 0.0}, std::log(t), -t);
}

}  // namespace spgl2::arch
