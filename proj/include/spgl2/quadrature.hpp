#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "spgl2/compensated.hpp"
#include "spgl2/core.hpp"

namespace spgl2 {

enum class QuadScheme {
  kAdaptiveGL,          // adaptive-subdivision Gauss-Legendre
  kDoubleExponential,   // tanh-sinh / exp-sinh
};

struct QuadratureSpec {
  QuadScheme scheme = QuadScheme::kAdaptiveGL;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 30;
};

/// Value with an achieved-error estimate. `converged == false` is the
/// tolerance-not-met flag; the best estimate is still returned.
struct IntegrationResult {
  Complex value{0.0, 0.0};
  double error = 0.0;
  bool converged = true;

  IntegrationResult& operator+=(const IntegrationResult& o) {
    value += o.value;
    error += o.error;
    converged = converged && o.converged;
    return *this;
  }
};

namespace detail {

// 15-point Gauss-Legendre on [-1, 1].
inline constexpr std::array<double, 8> kGL15Nodes = {
    0.0,
    0.2011940939974345223006283,
    0.3941513470775633698972074,
    0.5709721726085388475372267,
    0.7244177313601700474161861,
    0.8482065834104272162006483,
    0.9372733924007059043077589,
    0.9879925180204854284895657};
inline constexpr std::array<double, 8> kGL15Weights = {
    0.2025782419255612728806202,
    0.1984314853271115764561183,
    0.1861610000155622110268006,
    0.1662692058169939335532009,
    0.1395706779261543144478048,
    0.1071592204671719350118695,
    0.0703660474881081247092674,
    0.0307532419961172683546284};

template <typename F>
Complex gl15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  CompensatedComplexSum acc;
  acc.add(kGL15Weights[0] * f(mid));
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGL15Nodes[i];
    acc.add(kGL15Weights[i] * (f(mid + dx) + f(mid - dx)));
  }
  return half * acc.value();
}

template <typename F>
void adaptive_gl_rec(const F& f, double a, double b, Complex whole, double tol,
                     int depth, const QuadratureSpec& spec,
                     CompensatedComplexSum& acc, double& err_acc,
                     bool& converged) {
  const double mid = 0.5 * (a + b);
  const Complex left = gl15(f, a, mid);
  const Complex right = gl15(f, mid, b);
  const double err = std::abs(whole - left - right);
  if (err <= tol || depth >= spec.max_depth) {
    acc.add(left);
    acc.add(right);
    err_acc += err;
    if (err > tol) converged = false;
    return;
  }
  adaptive_gl_rec(f, a, mid, left, 0.5 * tol, depth + 1, spec, acc, err_acc,
                  converged);
  adaptive_gl_rec(f, mid, b, right, 0.5 * tol, depth + 1, spec, acc, err_acc,
                  converged);
}

}  // namespace detail

/// Adaptive Gauss-Legendre over a finite interval. Deterministic: fixed
/// node table, midpoint splits, left-to-right accumulation.
template <typename F>
IntegrationResult integrate_gl(const F& f, double a, double b,
                               const QuadratureSpec& spec = {}) {
  if (a == b) return {};
  IntegrationResult res;
  const Complex whole = detail::gl15(f, a, b);
  const double tol =
      std::max(spec.abs_tol, spec.rel_tol * std::max(1e-300, std::abs(whole)));
  CompensatedComplexSum acc;
  double err = 0.0;
  bool conv = true;
  detail::adaptive_gl_rec(f, a, b, whole, tol, 0, spec, acc, err, conv);
  res.value = acc.value();
  res.error = err;
  res.converged = conv;
  return res;
}

/// tanh-sinh rule on (a, b); tolerates algebraic-logarithmic endpoint
/// singularities. Level doubling until two passes agree.
template <typename F>
IntegrationResult integrate_de_finite(const F& f, double a, double b,
                                      const QuadratureSpec& spec = {}) {
  const double len = b - a;
  const double tmax = 3.8;
  Complex prev{0.0, 0.0};
  IntegrationResult res;
  for (int level = 2; level <= 10; ++level) {
    const double h = tmax / std::ldexp(1.0, level);
    const int n = static_cast<int>(tmax / h);
    Accumulator acc;
    for (int k = -n; k <= n; ++k) {
      const double t = k * h;
      const double s = std::sinh(t) * kPi / 2.0;
      // distance fractions from either endpoint, computed without
      // cancellation: 1 pm tanh(s) = 2 sigmoid(pm 2s)
      const double v = 1.0 / (1.0 + std::exp(-2.0 * s));
      const double xx = (s >= 0.0) ? b - len * (1.0 - v) : a + len * v;
      const double sech2 = 4.0 * v * (1.0 - v);  // 1/cosh^2(s)
      const double w = (kPi / 2.0) * std::cosh(t) * sech2;
      if (xx <= a || xx >= b) continue;
      const Complex fx = f(xx);
      if (!is_finite(fx)) continue;
      acc.add(w * h * 0.5 * len, fx);
    }
    res.value = acc.value();
    const double diff = std::abs(res.value - prev);
    if (level >= 4 &&
        diff <= std::max(spec.abs_tol,
                         spec.rel_tol * std::max(1e-300, std::abs(res.value)))) {
      res.error = diff;
      res.converged = true;
      return res;
    }
    res.error = diff;
    prev = res.value;
  }
  res.converged = false;
  return res;
}

/// exp-sinh rule on (a, infinity) for integrands with decay at infinity.
template <typename F>
IntegrationResult integrate_de_semiinf(const F& f, double a,
                                       const QuadratureSpec& spec = {}) {
  const double tmax = 3.8;
  Complex prev{0.0, 0.0};
  IntegrationResult res;
  for (int level = 2; level <= 10; ++level) {
    const double h = tmax / std::ldexp(1.0, level);
    const int n = static_cast<int>(tmax / h);
    Accumulator acc;
    for (int k = -n; k <= n; ++k) {
      const double t = k * h;
      const double s = std::sinh(t) * kPi / 2.0;
      const double x = std::exp(s);
      const double w = x * (kPi / 2.0) * std::cosh(t);
      const Complex fx = f(a + x);
      if (!is_finite(fx)) continue;
      acc.add(w * h, fx);
    }
    res.value = acc.value();
    const double diff = std::abs(res.value - prev);
    if (level >= 4 &&
        diff <= std::max(spec.abs_tol,
                         spec.rel_tol * std::max(1e-300, std::abs(res.value)))) {
      res.error = diff;
      res.converged = true;
      return res;
    }
    res.error = diff;
    prev = res.value;
  }
  res.converged = false;
  return res;
}

/// Dispatch on the requested scheme for a finite interval.
template <typename F>
IntegrationResult integrate(const F& f, double a, double b,
                            const QuadratureSpec& spec = {}) {
  if (spec.scheme == QuadScheme::kDoubleExponential) {
    return integrate_de_finite(f, a, b, spec);
  }
  return integrate_gl(f, a, b, spec);
}

/// int_0^rho u^{c-1} g(u) du for smooth g and complex c, Re c > 0.
/// Chebyshev fit of g plus exact monomial moments; robust for large
/// |Im c| where plain quadrature would chase the u^{i Im c} oscillation.
template <typename G>
Complex integrate_power_weight(const G& g, Complex c, double rho,
                               int degree = 18) {
  const int n = degree + 1;
  // values at Chebyshev nodes of [0, rho]
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) {
    const double x = std::cos(kPi * (j + 0.5) / n);  // [-1, 1]
    vals[j] = g(0.5 * rho * (x + 1.0));
  }
  // Chebyshev coefficients (first-kind, interior nodes)
  std::vector<Complex> cheb(n);
  for (int k = 0; k < n; ++k) {
    Complex s{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
      s += vals[j] * std::cos(kPi * k * (j + 0.5) / n);
    }
    cheb[k] = s * (2.0 / n);
  }
  cheb[0] *= 0.5;
  // convert to monomials in x via the T-recurrence, then substitute
  // x = 2u/rho - 1
  std::vector<std::vector<double>> T(n);
  T[0] = {1.0};
  if (n > 1) T[1] = {0.0, 1.0};
  for (int k = 2; k < n; ++k) {
    T[k].assign(k + 1, 0.0);
    for (size_t i = 0; i < T[k - 1].size(); ++i) T[k][i + 1] += 2.0 * T[k - 1][i];
    for (size_t i = 0; i < T[k - 2].size(); ++i) T[k][i] -= T[k - 2][i];
  }
  std::vector<Complex> poly_x(n, Complex{0.0, 0.0});
  for (int k = 0; k < n; ++k) {
    for (size_t i = 0; i < T[k].size(); ++i) poly_x[i] += cheb[k] * T[k][i];
  }
  // p(x) -> q(u) with x = alpha u + beta, alpha = 2/rho, beta = -1 (Horner)
  const double alpha = 2.0 / rho, beta = -1.0;
  std::vector<Complex> q = {poly_x[n - 1]};
  for (int k = n - 2; k >= 0; --k) {
    std::vector<Complex> nq(q.size() + 1, Complex{0.0, 0.0});
    for (size_t i = 0; i < q.size(); ++i) {
      nq[i + 1] += q[i] * alpha;
      nq[i] += q[i] * beta;
    }
    nq[0] += poly_x[k];
    q = std::move(nq);
  }
  // sum_j q_j rho^{c+j} / (c+j)
  CompensatedComplexSum acc;
  Complex rho_pow = std::pow(Complex(rho, 0.0), c);
  for (size_t j = 0; j < q.size(); ++j) {
    acc.add(q[j] * rho_pow / (c + static_cast<double>(j)));
    rho_pow *= rho;
  }
  return acc.value();
}

/// Result of a truncated vertical-line integral: value plus an explicit
/// tail report extrapolated from the observed panel decay.
struct ContourResult {
  Complex value{0.0, 0.0};
  double tail_estimate = 0.0;
  double quad_error = 0.0;
  bool converged = true;

  ContourResult& operator+=(const ContourResult& o) {
    value += o.value;
    tail_estimate += o.tail_estimate;
    quad_error += o.quad_error;
    converged = converged && o.converged;
    return *this;
  }
};

/// Integrate F over v in [-cutoff, cutoff] in fixed panels, symmetric
/// about 0, with a geometric tail extrapolation from the outermost
/// panel pair.
template <typename F>
ContourResult integrate_vertical(const F& f, double cutoff,
                                 const QuadratureSpec& spec = {},
                                 double panel = 5.0) {
  ContourResult out;
  CompensatedComplexSum acc;
  const int npanels = std::max(1, static_cast<int>(std::ceil(cutoff / panel)));
  double prev_mag = 0.0, last_mag = 0.0;
  for (int k = 0; k < npanels; ++k) {
    const double lo = k * panel;
    const double hi = std::min(cutoff, lo + panel);
    IntegrationResult up = integrate_gl(f, lo, hi, spec);
    IntegrationResult down = integrate_gl(
        [&](double v) { return f(-v); }, lo, hi, spec);
    acc.add(up.value);
    acc.add(down.value);
    out.quad_error += up.error + down.error;
    out.converged = out.converged && up.converged && down.converged;
    prev_mag = last_mag;
    last_mag = std::abs(up.value) + std::abs(down.value);
  }
  out.value = acc.value();
  if (npanels >= 2 && prev_mag > 0.0 && last_mag < prev_mag) {
    const double ratio = last_mag / prev_mag;
    out.tail_estimate = last_mag * ratio / (1.0 - ratio);
  } else {
    out.tail_estimate = last_mag;
  }
  return out;
}

}  // namespace spgl2
