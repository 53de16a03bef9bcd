#pragma once

#include <cmath>
#include <stdexcept>

#include "spgl2/core.hpp"
#include "spgl2/quadrature.hpp"

namespace spgl2::arch {

/// Character sgn^delta |.|^tau of R^x. tau is the full complex exponent;
/// unitary characters |.|^{it} have tau = it. This is the single
/// conversion point between the two tau-conventions in the source
/// formulas: everything internal is phrased in the contour variable
/// (the one integrated over Re tau = 1/4), and the discrete-series
/// quotient maps its variable accordingly (see gamma_quotient_G).
struct ArchCharacter {
  Complex tau{0.0, 0.0};
  int delta = 0;

  static ArchCharacter trivial() { return {}; }
  static ArchCharacter unitary(double t, int delta = 0) {
    return {Complex{0.0, t}, delta};
  }

  ArchCharacter compose(const ArchCharacter& o) const {
    return {tau + o.tau, (delta + o.delta) & 1};
  }
  ArchCharacter inverse() const { return {-tau, delta}; }

  Complex operator()(double x) const {
    if (x == 0.0) throw std::domain_error("ArchCharacter: argument 0");
    return sgn_pow(x, delta) * std::pow(Complex(std::abs(x), 0.0), tau);
  }

  bool is_trivial() const {
    return delta == 0 && std::abs(tau) == 0.0;
  }
  double real_part() const { return tau.real(); }
};

/// Irreducible unitary generic representation of PGL2(R): principal
/// series pi_{r,eta} or discrete series of even weight k.
class ArchRep {
 public:
  enum class Kind { kPrincipal, kDiscrete };

  static ArchRep principal(Complex r, int eta) {
    ArchRep rep;
    rep.kind_ = Kind::kPrincipal;
    rep.r_ = r;
    rep.eta_ = eta & 1;
    rep.theta_ = std::abs(r.imag());
    if (rep.theta_ >= 0.5) {
      throw std::invalid_argument("ArchRep: need |Im r| < 1/2");
    }
    return rep;
  }

  static ArchRep discrete(int k) {
    if (k < 2 || (k % 2) != 0) {
      throw std::invalid_argument("ArchRep: discrete series weight must be even >= 2");
    }
    ArchRep rep;
    rep.kind_ = Kind::kDiscrete;
    rep.k_ = k;
    rep.theta_ = 0.0;
    return rep;
  }

  Kind kind() const { return kind_; }
  bool is_principal() const { return kind_ == Kind::kPrincipal; }
  Complex r() const { return r_; }
  int eta() const { return eta_; }
  int weight() const { return k_; }
  double theta() const { return theta_; }

  /// Character inducing a principal series: chi_2 = sgn^eta |.|^{i r}.
  Complex inducing_exponent() const {
    if (!is_principal()) {
      throw std::invalid_argument("inducing_exponent: principal series only");
    }
    return kI * r_;
  }

 private:
  Kind kind_ = Kind::kPrincipal;
  Complex r_{0.0, 0.0};
  int eta_ = 0;
  int k_ = 2;
  double theta_ = 0.0;
};

/// Vertical-contour description for the character integrals.
struct ContourSpec {
  double sigma = 0.25;        // abscissa Re(chi); the default line (1/4)
  double im_cutoff = 50.0;    // truncation of the vertical integration
  QuadratureSpec quadrature{};
  int mellin_panels = 16;     // fixed composite-GL panels for Mellin data
};

}  // namespace spgl2::arch
