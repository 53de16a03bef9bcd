#include <catch2/catch_amalgamated.hpp>

#include "reference_values.hpp"
#include "spgl2/arch/gamma_factors.hpp"

using namespace spgl2;
using namespace spgl2::arch;

namespace {
double rel_err(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1e-300, std::abs(b));
}
}  // namespace

TEST_CASE("gamma_quotient_G: discrete series") {
  const auto pi2w = ArchRep::discrete(2);
  // delta = 1 kills the discrete quotient
  CHECK(gamma_quotient_G(pi2w, ArchCharacter{Complex{0.3, 1.0}, 1}) ==
        Complex{0.0, 0.0});
  // k = 2, tau = 0: i^2 Gamma(1)/Gamma(1) = -1
  CHECK(rel_err(gamma_quotient_G(pi2w, ArchCharacter{Complex{0.0, 0.0}, 0}),
                Complex{-1.0, 0.0}) < 1e-14);
  const auto pi4 = ArchRep::discrete(4);
  CHECK(rel_err(gamma_quotient_G(pi4, ArchCharacter{Complex{0.0, 0.0}, 0}),
                Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("gamma_quotient_G: principal series reference value") {
  const auto pi = ArchRep::principal(Complex{0.0, 0.0}, 0);
  CHECK(rel_err(gamma_quotient_G(pi, ArchCharacter{Complex{0.25, 0.0}, 0}),
                ref::kGquot_r0_tau_quarter) < 1e-12);
  // pole reporting
  CHECK_THROWS_AS(
      gamma_quotient_G(pi, ArchCharacter{Complex{0.5, 0.0}, 0}), pole_error);
}

TEST_CASE("gamma factor vs quotient G bookkeeping") {
  // gamma(1/2, pi x chi) = (-1)^rho pi^{2 tau} G(pi; chi) for principal pi
  const auto pi = ArchRep::principal(Complex{1.7, 0.0}, 0);
  for (int delta : {0, 1}) {
    const ArchCharacter chi{Complex{0.25, 2.3}, delta};
    const int rho = (pi.eta() == delta) ? 0 : 1;
    const Complex lhs = gamma_half(pi, chi);
    const Complex rhs = (rho ? -1.0 : 1.0) *
                        std::pow(Complex{kPi, 0.0}, 2.0 * chi.tau) *
                        gamma_quotient_G(pi, chi);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
  // and (2 pi)^{2 tau} for the discrete series
  const auto pik = ArchRep::discrete(6);
  const ArchCharacter chi0{Complex{0.25, -1.2}, 0};
  CHECK(rel_err(gamma_half(pik, chi0),
                std::pow(Complex{kTwoPi, 0.0}, 2.0 * chi0.tau) *
                    gamma_quotient_G(pik, chi0)) < 1e-12);
}

TEST_CASE("gamma duality over R") {
  // gamma(s, chi) gamma(1-s, chi^{-1}) = chi(-1) per GL(1) factor; the
  // rank-2 factors inherit the square
  const auto pi = ArchRep::principal(Complex{0.8, 0.0}, 1);
  const Complex s{0.5, 0.0};
  const ArchCharacter chi{Complex{0.2, 1.1}, 1};
  const ArchCharacter chi_inv = chi.inverse();
  const Complex prod = gamma_rep(s, pi, chi) * gamma_rep(1.0 - s, pi, chi_inv);
  CHECK(rel_err(prod, Complex{1.0, 0.0}) < 1e-11);
}

TEST_CASE("gamma_one twisted factor at the hast specialization") {
  // pi_1 = principal(0, even), trivial chi_2: the delta = 0 factor is
  // Gamma_R(tau)^2 / Gamma_R(1-tau)^2, the delta = 1 factor is
  // -Gamma_R(tau+1)^2/Gamma_R(2-tau)^2
  const auto pi1 = ArchRep::principal(Complex{0.0, 0.0}, 0);
  const Complex tau{0.25, 1.4};
  const Complex g0 =
      gamma_one_twisted(pi1, 0, Complex{0.0, 0.0}, ArchCharacter{tau, 0});
  const Complex expect0 =
      std::exp(2.0 * (log_gamma_R(tau) - log_gamma_R(1.0 - tau)));
  CHECK(rel_err(g0, expect0) < 1e-12);
  const Complex g1 =
      gamma_one_twisted(pi1, 0, Complex{0.0, 0.0}, ArchCharacter{tau, 1});
  const Complex expect1 =
      -std::exp(2.0 * (log_gamma_R(tau + 1.0) - log_gamma_R(2.0 - tau)));
  CHECK(rel_err(g1, expect1) < 1e-12);
}

TEST_CASE("trig rewrite of the combined quotient (even pair, r1 = 0)") {
  // (Q0 + Q1)(1-s) = (2/pi)(2 cosh(pi r) - sin(2 pi s)) Gamma(1-s)^2
  //                   prod_pm Gamma(-1/2 pm ir + s)
  const double r = 1.0;
  const auto pi = ArchRep::principal(Complex{r, 0.0}, 0);
  const auto pi1 = ArchRep::principal(Complex{0.0, 0.0}, 0);
  for (double v : {0.3, 2.0, 5.0}) {
    const Complex s{0.75, v};
    Complex lhs{0.0, 0.0};
    for (int delta : {0, 1}) {
      const ArchCharacter chi{1.0 - s, delta};
      lhs += gamma_half(pi, chi) *
             gamma_one_twisted(pi1, 0, Complex{0.0, 0.0}, chi);
    }
    const Complex rhs =
        (2.0 / kPi) * (2.0 * std::cosh(kPi * r) - std::sin(kTwoPi * s)) *
        std::exp(2.0 * log_gamma(1.0 - s) + log_gamma(s - 0.5 + kI * r) +
                 log_gamma(s - 0.5 - kI * r));
    CHECK(rel_err(lhs, rhs) < 1e-11);
  }
}
