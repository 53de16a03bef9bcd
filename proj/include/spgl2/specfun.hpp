#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spgl2/core.hpp"
#include "spgl2/quadrature.hpp"

namespace spgl2 {

namespace detail {
// B_{2n} / (2n (2n-1)) for the Stirling series.
inline constexpr std::array<double, 12> kStirling = {
    1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
    -691.0 / 360360, 1.0 / 156, -3617.0 / 122400, 43867.0 / 244188,
    -174611.0 / 125400, 77683.0 / 5796, -236364091.0 / 1506960};
}  // namespace detail

/// Principal branch of log Gamma via the Stirling series, with downward
/// recurrence shifts for Re z < 12. Accurate to ~1e-13 relative on the
/// strips the transforms use (|z|, |Im z| <= 200).
inline Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw pole_error("log_gamma: pole at non-positive integer");
  }
  Complex shift{0.0, 0.0};
  while (z.real() < 12.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const Complex zinv = 1.0 / z;
  const Complex zinv2 = zinv * zinv;
  Complex series{0.0, 0.0};
  Complex p = zinv;
  for (double c : detail::kStirling) {
    series += c * p;
    p *= zinv2;
  }
  const Complex half_log_2pi{0.91893853320467274178032973640562, 0.0};
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series - shift;
}

inline Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

/// Digamma by the same shift-and-series scheme.
inline Complex digamma(Complex z) {
  if (near_nonpositive_integer(z)) {
    throw pole_error("digamma: pole at non-positive integer");
  }
  Complex shift{0.0, 0.0};
  while (z.real() < 12.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  // psi(z) ~ log z - 1/(2z) - sum B_{2n} / (2n z^{2n})
  static constexpr std::array<double, 8> kPsi = {
      1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
      1.0 / 132, -691.0 / 32760, 1.0 / 12, -3617.0 / 8160};
  const Complex zinv2 = 1.0 / (z * z);
  Complex series{0.0, 0.0};
  Complex p = zinv2;
  for (double c : kPsi) {
    series += c * p;
    p *= zinv2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

/// Gamma_R(s) = pi^{-s/2} Gamma(s/2).
inline Complex log_gamma_R(Complex s) {
  if (near_nonpositive_integer(0.5 * s)) {
    throw pole_error("gamma_R: pole at s in {0, -2, -4, ...}");
  }
  return -0.5 * s * kLogPi + log_gamma(0.5 * s);
}

inline Complex gamma_R(Complex s) { return std::exp(log_gamma_R(s)); }

namespace detail {

inline Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z,
                             int max_terms = 4000) {
  Complex term{1.0, 0.0};
  CompensatedComplexSum sum;
  sum.add(term);
  for (int n = 0; n < max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum.add(term);
    if (std::abs(term) < 1e-17 * (1.0 + std::abs(sum.value())) && n > 4) {
      return sum.value();
    }
  }
  throw std::runtime_error("hyp2f1: series did not converge");
}

}  // namespace detail

/// Gauss 2F1 for z real < 1 (and small |z| complex); power series inside
/// |z| <= 0.6, Pfaff z -> z/(z-1) for z < -0.25. The Pfaff map is the
/// 9.131.1 transformation specialised to this parameter family.
inline Complex hyp2f1(Complex a, Complex b, Complex c, Complex z,
                      int depth = 0) {
  if (near_nonpositive_integer(c)) {
    throw pole_error("hyp2f1: c is a non-positive integer");
  }
  if (std::abs(z) < 1e-300) return {1.0, 0.0};
  if (std::abs(z) <= 0.6 || (z.real() > 0.0 && z.real() < 0.95 &&
                             std::abs(z.imag()) < 1e-14)) {
    return detail::hyp2f1_series(a, b, c, z, z.real() > 0.6 ? 20000 : 4000);
  }
  if (z.real() < 0.0 && depth == 0) {
    // F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
    const Complex zp = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, zp, depth + 1);
  }
  if (std::abs(z) <= 0.98) {
    return detail::hyp2f1_series(a, b, c, z, 60000);
  }
  throw std::runtime_error("hyp2f1: no transformation maps z into the disk");
}

/// K_nu(x) = int_0^infty e^{-x cosh u} cosh(nu u) du, x > 0.
inline Complex bessel_K(Complex nu, double x, double rel_tol = 1e-12) {
  if (x <= 0.0) throw std::domain_error("bessel_K: x must be positive");
  // cutoff where the envelope underflows
  double umax = 1.0;
  const double budget = 750.0 + std::abs(nu.real());
  while (x * std::cosh(umax) - std::abs(nu.real()) * umax < budget) {
    umax += 0.5;
    if (umax > 2000.0) break;
  }
  if (x > 1400.0) {
    throw std::overflow_error("bessel_K: argument beyond exponent range");
  }
  QuadratureSpec spec;
  spec.rel_tol = rel_tol;
  spec.abs_tol = 1e-300;
  auto f = [&](double u) { return std::exp(-x * std::cosh(u)) * std::cosh(nu * u); };
  return integrate_gl(f, 0.0, umax, spec).value;
}

/// Finite-order character of (Z/qZ)^x held as a value table; q = p^m.
class UnitCharacter {
 public:
  UnitCharacter() : q_(1), p_(1), m_(0), values_(1, Complex{1.0, 0.0}) {}

  UnitCharacter(long p, int m, std::vector<Complex> values)
      : q_(1), p_(p), m_(m), values_(std::move(values)) {
    for (int i = 0; i < m; ++i) q_ *= p;
    if (static_cast<long>(values_.size()) != q_) {
      throw std::invalid_argument("UnitCharacter: table size != modulus");
    }
  }

  /// Trivial character (conductor exponent 0).
  static UnitCharacter trivial(long p = 1) {
    UnitCharacter chi;
    chi.p_ = p;
    return chi;
  }

  /// chi(g^k) = e(jk / ord(g)) on the cyclic group (Z/p^m Z)^x, odd p.
  static UnitCharacter from_root_power(long p, int m, long j);

  /// Legendre symbol mod odd prime p.
  static UnitCharacter quadratic(long p) {
    std::vector<Complex> vals(p, Complex{0.0, 0.0});
    for (long a = 1; a < p; ++a) {
      long r = (a * a) % p;
      vals[r] = Complex{1.0, 0.0};
    }
    for (long a = 1; a < p; ++a) {
      if (vals[a] == Complex{0.0, 0.0}) vals[a] = Complex{-1.0, 0.0};
    }
    return UnitCharacter(p, 1, std::move(vals));
  }

  long modulus() const { return q_; }
  long prime() const { return p_; }
  int conductor_exponent() const { return m_; }
  bool is_trivial() const { return m_ == 0; }

  Complex operator()(long a) const {
    if (m_ == 0) return {1.0, 0.0};
    long r = a % q_;
    if (r < 0) r += q_;
    if (std::gcd(r, p_) != 1) return {0.0, 0.0};
    return values_[r];
  }

  UnitCharacter inverse() const {
    if (m_ == 0) return *this;
    std::vector<Complex> vals(q_);
    for (long a = 0; a < q_; ++a) vals[a] = std::conj(values_[a]);
    return UnitCharacter(p_, m_, std::move(vals));
  }

  /// Primitive mod p^m: nontrivial on 1 + p^{m-1} Z (for m >= 2), or
  /// nontrivial (for m = 1).
  bool is_primitive() const {
    if (m_ == 0) return false;
    if (m_ == 1) {
      for (long a = 2; a < q_; ++a) {
        if (std::gcd(a, p_) == 1 &&
            std::abs((*this)(a)-Complex{1.0, 0.0}) > 1e-12) {
          return true;
        }
      }
      return false;
    }
    const long step = q_ / p_;
    for (long t = 1; t < p_; ++t) {
      const long a = 1 + t * step;
      if (std::gcd(a, p_) == 1 &&
          std::abs((*this)(a)-Complex{1.0, 0.0}) > 1e-12) {
        return true;
      }
    }
    return false;
  }

  Complex at_minus_one() const { return (*this)(q_ - 1); }

 private:
  long q_, p_;
  int m_;
  std::vector<Complex> values_;
};

inline UnitCharacter UnitCharacter::from_root_power(long p, int m, long j) {
  long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  const long phi = q / p * (p - 1);
  // find a generator of (Z/qZ)^x (p odd, or p = 2 with m <= 2)
  auto order_of = [&](long g) {
    long x = g % q, ord = 1;
    while (x != 1) {
      x = (x * g) % q;
      ++ord;
      if (ord > phi) return -1L;
    }
    return ord;
  };
  long gen = -1;
  for (long g = 2; g < q; ++g) {
    if (std::gcd(g, q) != 1) continue;
    if (order_of(g) == phi) {
      gen = g;
      break;
    }
  }
  if (gen < 0) throw std::invalid_argument("no primitive root mod q");
  std::vector<Complex> vals(q, Complex{0.0, 0.0});
  long x = 1;
  for (long k = 0; k < phi; ++k) {
    vals[x] = std::polar(1.0, kTwoPi * static_cast<double>(j * k % phi) /
                                  static_cast<double>(phi));
    x = (x * gen) % q;
  }
  return UnitCharacter(p, m, std::move(vals));
}

/// tau(chi) = sum_{a mod q} chi(a) e(a/q) by direct summation.
inline Complex gauss_sum(const UnitCharacter& chi) {
  if (!chi.is_primitive()) {
    throw std::invalid_argument("gauss_sum: character must be primitive");
  }
  const long q = chi.modulus();
  CompensatedComplexSum acc;
  for (long a = 1; a < q; ++a) {
    const Complex v = chi(a);
    if (v == Complex{0.0, 0.0}) continue;
    acc.add(v * std::polar(1.0, kTwoPi * static_cast<double>(a) /
                                    static_cast<double>(q)));
  }
  return acc.value();
}

}  // namespace spgl2
