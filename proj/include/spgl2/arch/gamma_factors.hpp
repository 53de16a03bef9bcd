#pragma once

#include <array>
#include <cmath>

#include "spgl2/arch/characters.hpp"
#include "spgl2/core.hpp"
#include "spgl2/specfun.hpp"

namespace spgl2::arch {

/// GL(1) gamma factor over R for sgn^a |.|^u at argument s, with the
/// standard additive character e(x):
///   gamma(s, sgn^a |.|^u) = (-i)^a Gamma_R(1-s-u+a) / Gamma_R(s+u+a).
inline Complex gl1_gamma(Complex s, int a, Complex u) {
  const Complex lg = log_gamma_R(1.0 - s - u + static_cast<double>(a)) -
                     log_gamma_R(s + u + static_cast<double>(a));
  const Complex eps = (a & 1) ? Complex{0.0, -1.0} : Complex{1.0, 0.0};
  return eps * std::exp(lg);
}

/// gamma(s, pi x chi) for pi on PGL2(R). Principal series factor as two
/// GL(1) gammas; discrete series of weight k uses
/// Gamma_C(s) = 2 (2 pi)^{-s} Gamma(s) with epsilon = i^k.
inline Complex gamma_rep(Complex s, const ArchRep& pi,
                         const ArchCharacter& chi) {
  if (pi.is_principal()) {
    const int a = (pi.eta() + chi.delta) & 1;
    return gl1_gamma(s, a, chi.tau + kI * pi.r()) *
           gl1_gamma(s, a, chi.tau - kI * pi.r());
  }
  const double half_km1 = 0.5 * (pi.weight() - 1);
  const Complex num = 1.0 - s - chi.tau + half_km1;
  const Complex den = s + chi.tau + half_km1;
  const Complex lg = log_gamma(num) - log_gamma(den) +
                     (den - num) * std::log(kTwoPi);
  const double eps = ((pi.weight() / 2) % 2 == 0) ? 1.0 : -1.0;  // i^k, k even
  return eps * std::exp(lg);
}

/// gamma(1/2, pi x chi), the spectral-side factor of the transforms.
inline Complex gamma_half(const ArchRep& pi, const ArchCharacter& chi) {
  return gamma_rep(Complex{0.5, 0.0}, pi, chi);
}

/// gamma(1, pi1 x xi x chi^{-1}) where xi = sgn^b |.|^w is the
/// chi_2-twist (conjugated or not depending on the transform direction).
inline Complex gamma_one_twisted(const ArchRep& pi1, int b, Complex w,
                                 const ArchCharacter& chi) {
  const ArchCharacter combined{w - chi.tau, (b + chi.delta) & 1};
  return gamma_rep(Complex{1.0, 0.0}, pi1, combined);
}

/// xi for the forward transforms: conj(chi_2)^{-1}.
inline Complex forward_twist_exponent(const ArchRep& pi2) {
  return kI * std::conj(pi2.r());
}

/// xi for the inversion formulas: conj(chi_2).
inline Complex inverse_twist_exponent(const ArchRep& pi2) {
  return -kI * std::conj(pi2.r());
}

/// The gamma-quotient G(pi; chi) as a standalone quotient of plain Gamma
/// functions:
///   principal (r, eta):  prod_pm Gamma((1/2 pm ir - tau + rho)/2) /
///                                Gamma((1/2 pm ir + tau + rho)/2),
///                        rho = 0 if eta == delta else 1;
///   discrete weight k:   1_{delta=0} i^k Gamma(k/2 - tau)/Gamma(k/2 + tau).
/// Note G is a bare Gamma quotient, not the full gamma factor: the two
/// differ by (-1)^rho pi^{2 tau} (principal) resp. (2 pi)^{2 tau}
/// (discrete); the transforms use gamma_half/gamma_one_twisted, which
/// carry the complete factors.
inline Complex gamma_quotient_G(const ArchRep& pi, const ArchCharacter& chi) {
  if (pi.is_principal()) {
    const int rho = (pi.eta() == chi.delta) ? 0 : 1;
    Complex lg{0.0, 0.0};
    for (int sign : {+1, -1}) {
      const Complex ir = kI * pi.r() * static_cast<double>(sign);
      const Complex num = 0.5 * (0.5 + ir - chi.tau + static_cast<double>(rho));
      const Complex den = 0.5 * (0.5 + ir + chi.tau + static_cast<double>(rho));
      if (near_nonpositive_integer(num)) {
        throw pole_error("gamma_quotient_G: Gamma pole at argument (1/2 pm ir - tau + rho)/2");
      }
      lg += log_gamma(num) - log_gamma(den);
    }
    return std::exp(lg);
  }
  if (chi.delta != 0) return {0.0, 0.0};
  const double halfk = 0.5 * pi.weight();
  const Complex num = halfk - chi.tau;
  if (near_nonpositive_integer(num)) {
    throw pole_error("gamma_quotient_G: Gamma pole at argument k/2 - tau");
  }
  const double ik = ((pi.weight() / 2) % 2 == 0) ? 1.0 : -1.0;
  return ik * std::exp(log_gamma(num) - log_gamma(halfk + chi.tau));
}

}  // namespace spgl2::arch
