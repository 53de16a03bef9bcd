#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spgl2/core.hpp"

namespace spgl2::padic {

/// Laurent polynomial in X with complex coefficients: dense storage
/// from min_deg upward.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int min_deg, std::vector<Complex> coeffs)
      : min_(min_deg), c_(std::move(coeffs)) {
    trim();
  }
  static LaurentPoly constant(Complex v) { return {0, {v}}; }
  static LaurentPoly monomial(Complex v, int deg) { return {deg, {v}}; }

  bool zero() const { return c_.empty(); }
  int min_deg() const { return min_; }
  int max_deg() const { return min_ + static_cast<int>(c_.size()) - 1; }

  Complex coeff(int deg) const {
    const int i = deg - min_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return {0.0, 0.0};
    return c_[i];
  }

  void add_term(int deg, Complex v) {
    if (v == Complex{0.0, 0.0}) return;
    if (c_.empty()) {
      min_ = deg;
      c_ = {v};
      return;
    }
    if (deg < min_) {
      c_.insert(c_.begin(), min_ - deg, Complex{0.0, 0.0});
      min_ = deg;
    } else if (deg > max_deg()) {
      c_.resize(deg - min_ + 1, Complex{0.0, 0.0});
    }
    c_[deg - min_] += v;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (int d = o.min_; d <= o.max_deg(); ++d) r.add_term(d, o.coeff(d));
    r.trim();
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    if (zero() || o.zero()) return {};
    std::vector<Complex> out(c_.size() + o.c_.size() - 1, Complex{0.0, 0.0});
    for (size_t i = 0; i < c_.size(); ++i) {
      for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return {min_ + o.min_, std::move(out)};
  }
  LaurentPoly operator*(Complex s) const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }
  LaurentPoly shifted(int k) const {  // * X^k
    LaurentPoly r = *this;
    r.min_ += k;
    return r;
  }

  Complex eval(Complex x) const {
    Complex s{0.0, 0.0};
    Complex p = std::pow(x, min_);
    for (const auto& v : c_) {
      s += v * p;
      p *= x;
    }
    return s;
  }

  /// substitute X -> a X (coefficientwise exact)
  LaurentPoly substitute_scale(Complex a) const {
    LaurentPoly r = *this;
    Complex p = std::pow(a, min_);
    for (auto& v : r.c_) {
      v *= p;
      p *= a;
    }
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  void trim(double rel = 0.0) {
    double scale = max_abs();
    auto negligible = [&](Complex v) {
      return std::abs(v) <= rel * scale;
    };
    size_t lo = 0, hi = c_.size();
    while (lo < hi && negligible(c_[lo])) ++lo;
    while (hi > lo && negligible(c_[hi - 1])) --hi;
    if (lo == hi) {
      c_.clear();
      min_ = 0;
      return;
    }
    c_ = std::vector<Complex>(c_.begin() + lo, c_.begin() + hi);
    min_ += static_cast<int>(lo);
  }

 private:
  int min_ = 0;
  std::vector<Complex> c_;
};

/// Rational function in X = p^{-s}: numerator / denominator Laurent
/// polynomials over a fixed prime. The exact carrier of the local L-,
/// epsilon- and gamma-factors and of the Mellin transforms.
struct LaurentRational {
  long p = 2;
  LaurentPoly num;
  LaurentPoly den = LaurentPoly::constant({1.0, 0.0});

  static LaurentRational from_poly(long p, LaurentPoly n) {
    return {p, std::move(n), LaurentPoly::constant({1.0, 0.0})};
  }

  LaurentRational operator*(const LaurentRational& o) const {
    if (p != o.p) throw std::invalid_argument("LaurentRational: prime mismatch");
    return {p, num * o.num, den * o.den};
  }
  LaurentRational operator*(Complex s) const { return {p, num * s, den}; }

  LaurentRational inverse() const { return {p, den, num}; }

  Complex eval(Complex x) const { return num.eval(x) / den.eval(x); }

  /// substitute X -> a X in both numerator and denominator
  LaurentRational substitute_scale(Complex a) const {
    return {p, num.substitute_scale(a), den.substitute_scale(a)};
  }

  /// substitute X -> p^{-1} X^{-1}  (i.e. s -> 1 - s)
  LaurentRational substitute_one_minus_s() const {
    auto flip = [&](const LaurentPoly& q) {
      LaurentPoly out;
      const double pinv = 1.0 / static_cast<double>(p);
      for (int d = q.min_deg(); d <= q.max_deg(); ++d) {
        out.add_term(-d, q.coeff(d) * std::pow(pinv, d));
      }
      return out;
    };
    return {p, flip(num), flip(den)};
  }

  /// Remove common monomial content so degrees start at 0 where
  /// possible; representation stays unique up to unit monomial scaling.
  LaurentRational reduced() const {
    LaurentRational r = *this;
    r.num.trim(1e-15);
    r.den.trim(1e-15);
    if (!r.num.zero()) r.num = r.num.shifted(-r.num.min_deg());
    if (!r.den.zero()) {
      const int shift = -r.den.min_deg();
      r.den = r.den.shifted(shift);
      // normalize denominator constant term to 1 when possible
      const Complex c0 = r.den.coeff(0);
      if (std::abs(c0) > 1e-300) {
        r.num = r.num * (1.0 / c0);
        r.den = r.den * (1.0 / c0);
      }
    }
    return r;
  }
};

/// Symbolic equality of rational functions: cross-multiplied
/// coefficientwise agreement within 1e-12 of the scale.
inline bool symbolic_equal(const LaurentRational& a, const LaurentRational& b,
                           double tol = 1e-12) {
  LaurentPoly lhs = a.num * b.den;
  LaurentPoly rhs = b.num * a.den;
  LaurentPoly diff = lhs - rhs;
  const double scale = std::max(lhs.max_abs(), rhs.max_abs());
  if (scale == 0.0) return true;
  diff.trim(0.0);
  for (int d = diff.min_deg(); d <= diff.max_deg(); ++d) {
    if (std::abs(diff.coeff(d)) > tol * scale) return false;
  }
  return true;
}

/// N(X) / prod_i (X - rho_i): the factored form every contour integrand
/// assembles into (all gamma-factor denominators are built from known
/// linear factors, so no root finding is ever needed).
struct FactoredRational {
  LaurentPoly num;                 // may carry negative powers of X
  std::vector<Complex> den_roots;  // listed with multiplicity

  void mul_scalar(Complex s) { num = num * s; }
  /// *(1 - cX)
  void mul_one_minus_cX(Complex c) {
    num = num * LaurentPoly(0, {Complex{1.0, 0.0}, -c});
  }
  /// *(1 - aX^{-1})
  void mul_one_minus_a_over_X(Complex a) {
    num = num * LaurentPoly(-1, {-a, Complex{1.0, 0.0}});
  }
  /// /(1 - bX) = (-1/b) / (X - 1/b)
  void div_one_minus_cX(Complex b) {
    num = num * (-1.0 / b);
    den_roots.push_back(1.0 / b);
  }
  /// /(1 - aX^{-1}) = X / (X - a)
  void div_one_minus_a_over_X(Complex a) {
    num = num.shifted(1);
    den_roots.push_back(a);
  }

  Complex eval(Complex x) const {
    Complex v = num.eval(x);
    for (const auto& r : den_roots) v /= (x - r);
    return v;
  }
};

namespace detail {

/// Taylor coefficients of prod_j 1/(X - rho_j) around x0 (roots distinct
/// from x0), up to order n.
inline std::vector<Complex> inv_prod_series(const std::vector<Complex>& roots,
                                            Complex x0, int n) {
  std::vector<Complex> s(n + 1, Complex{0.0, 0.0});
  s[0] = {1.0, 0.0};
  for (const auto& rho : roots) {
    // 1/(x0 + e - rho) = (1/(x0-rho)) sum (-e/(x0-rho))^k
    const Complex d = x0 - rho;
    std::vector<Complex> f(n + 1);
    Complex pw = 1.0 / d;
    for (int k = 0; k <= n; ++k) {
      f[k] = pw;
      pw *= -1.0 / d;
    }
    std::vector<Complex> t(n + 1, Complex{0.0, 0.0});
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) t[i + j] += s[i] * f[j];
    }
    s = std::move(t);
  }
  return s;
}

/// Taylor coefficients of a Laurent polynomial around x0 != 0, order n.
inline std::vector<Complex> laurent_series_at(const LaurentPoly& q, Complex x0,
                                              int n) {
  // derivatives of x^d: d(d-1)...(d-k+1) x^{d-k}
  std::vector<Complex> out(n + 1, Complex{0.0, 0.0});
  for (int d = q.min_deg(); d <= q.max_deg(); ++d) {
    const Complex c = q.coeff(d);
    if (c == Complex{0.0, 0.0}) continue;
    double fall = 1.0;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) fall *= static_cast<double>(d - k + 1);
      if (fall == 0.0) break;
      double kfact = 1.0;
      for (int j = 2; j <= k; ++j) kfact *= j;
      out[k] += c * fall / kfact * std::pow(x0, d - k);
    }
  }
  return out;
}

}  // namespace detail

/// Sum of residues of F inside |X| < radius (poles at den_roots and,
/// for negative numerator powers, at 0). Nearby roots are clustered
/// into multiple poles. Throws if a pole sits on the circle.
inline Complex residue_sum_inside(const FactoredRational& F, double radius,
                                  double on_contour_tol = 1e-9) {
  // cluster roots
  std::vector<std::pair<Complex, int>> groups;
  for (const auto& rho : F.den_roots) {
    bool found = false;
    for (auto& g : groups) {
      if (std::abs(rho - g.first) <=
          1e-9 * std::max(1.0, std::abs(g.first))) {
        ++g.second;
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({rho, 1});
  }
  Complex total{0.0, 0.0};
  for (const auto& [rho, m] : groups) {
    const double d = std::abs(rho);
    if (std::abs(d - radius) <= on_contour_tol * radius) {
      throw std::domain_error(
          "residue_sum_inside: pole on the contour; perturb sigma");
    }
    if (d > radius) continue;
    // residue of num(X)/prod(X-rho_j) at rho with multiplicity m:
    // Taylor-expand num / prod_{other}(X - rho_j) to order m-1
    std::vector<Complex> others;
    int seen = 0;
    for (const auto& r2 : F.den_roots) {
      if (std::abs(r2 - rho) <= 1e-9 * std::max(1.0, std::abs(rho)) &&
          seen < m) {
        ++seen;
        continue;
      }
      others.push_back(r2);
    }
    const auto numser = detail::laurent_series_at(F.num, rho, m - 1);
    const auto invser = detail::inv_prod_series(others, rho, m - 1);
    Complex res{0.0, 0.0};
    for (int i = 0; i < m; ++i) res += numser[i] * invser[m - 1 - i];
    total += res;
  }
  // pole at 0 from negative powers of the numerator
  const int k = -F.num.min_deg();
  if (k >= 1 && radius > 0.0) {
    const auto inv0 = detail::inv_prod_series(F.den_roots, Complex{0.0, 0.0},
                                              k - 1);
    Complex res{0.0, 0.0};
    for (int j = 0; j <= k - 1; ++j) {
      res += F.num.coeff(-1 - j) * inv0[j];
    }
    total += res;
  }
  return total;
}

}  // namespace spgl2::padic
