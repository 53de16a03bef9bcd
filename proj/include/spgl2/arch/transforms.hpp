#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spgl2/arch/characters.hpp"
#include "spgl2/arch/gamma_factors.hpp"
#include "spgl2/arch/kernel.hpp"
#include "spgl2/bump.hpp"
#include "spgl2/core.hpp"
#include "spgl2/quadrature.hpp"
#include "spgl2/specfun.hpp"

namespace spgl2::arch {

namespace detail {

inline void require_principal_pi2(const ArchRep& pi2) {
  if (!pi2.is_principal()) {
    throw std::invalid_argument("pi_2 must be a principal series representation");
  }
}

inline void check_strip(double sigma, double lo, double hi, const char* what) {
  if (!(sigma > lo && sigma < hi)) {
    throw strip_error(std::string(what) + ": contour abscissa " +
                      std::to_string(sigma) + " outside (" +
                      std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
}

/// Fixed-node Mellin data: T(tau) = sum_i coef_i exp(-tau * logt_i)
/// (or +tau, by sign convention of the caller). Nodes are composite
/// GL15 panels, so one precompute serves every point on the contour.
struct MellinData {
  std::vector<double> logt;
  std::vector<Complex> coef0;  // delta = 0
  std::vector<Complex> coef1;  // delta = 1

  Complex eval(Complex tau_times, int delta) const {
    // caller passes the exponent multiplier directly
    CompensatedComplexSum acc;
    const auto& c = delta ? coef1 : coef0;
    for (size_t i = 0; i < logt.size(); ++i) {
      acc.add(c[i] * std::exp(tau_times * logt[i]));
    }
    return acc.value();
  }
  bool empty() const { return logt.empty(); }
};

/// conj(chi_2) evaluated at x: sgn(x)^{eta_2} |x|^{-i conj(r_2)}.
inline Complex conj_chi2(const ArchRep& pi2, double x) {
  const Complex expo = -kI * std::conj(pi2.r());
  return sgn_pow(x, pi2.eta()) *
         std::exp(expo * std::log(std::abs(x)));
}

template <typename F>
void foreach_gl_node(const IntervalList& ivs, int panels, const F& fn) {
  using spgl2::detail::kGL15Nodes;
  using spgl2::detail::kGL15Weights;
  for (const auto& iv : ivs) {
    const double h = iv.length() / panels;
    for (int p = 0; p < panels; ++p) {
      const double a = iv.lo + p * h, b = a + h;
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      fn(mid, half * kGL15Weights[0]);
      for (int i = 1; i < 8; ++i) {
        const double dx = half * kGL15Nodes[i];
        fn(mid + dx, half * kGL15Weights[i]);
        fn(mid - dx, half * kGL15Weights[i]);
      }
    }
  }
}

/// Chebyshev fit on [0, rho] returned as monomial coefficients.
inline std::vector<Complex> chebyshev_monomial_fit(
    const std::function<Complex(double)>& g, double rho, int degree = 18);

}  // namespace detail

/// h^flat(chi, y) = int h(z, yz) chi(z) d^x z. Compactly supported and
/// entire in chi.
inline IntegrationResult h_flat(const ArchCharacter& chi, double y,
                                const BivariateWeight& h,
                                const QuadratureSpec& spec = {}) {
  if (y == 0.0) throw std::domain_error("h_flat: y must be nonzero");
  IntegrationResult total;
  if (h.zero()) return total;
  const IntervalList zs = intersect_intervals(
      h.factor1.support(), scale_intervals(h.factor2.support(), 1.0 / y));
  for (const auto& iv : zs) {
    auto f = [&](double z) -> Complex {
      const double hv = h(z, y * z);
      if (hv == 0.0) return {0.0, 0.0};
      return hv * chi(z) / std::abs(z);
    };
    total += integrate_gl(f, iv.lo, iv.hi, spec);
  }
  return total;
}

/// H(y, chi) = int h(z, yz) chi(z) d^x z; same integral as h^flat with
/// the arguments transposed, kept as its own name.
inline IntegrationResult H_of(double y, const ArchCharacter& chi0,
                              const BivariateWeight& h,
                              const QuadratureSpec& spec = {}) {
  return h_flat(chi0, y, h, spec);
}

/// Support of y |-> H(y, .): all ratios supp2 / supp1.
inline IntervalList H_support(const BivariateWeight& h) {
  IntervalList out;
  for (const auto& s1 : h.factor1.support()) {
    for (const auto& s2 : h.factor2.support()) {
      // intervals never contain 0, so the four corner ratios bound the set
      const std::array<double, 4> c = {s2.lo / s1.lo, s2.lo / s1.hi,
                                       s2.hi / s1.lo, s2.hi / s1.hi};
      out.push_back({*std::min_element(c.begin(), c.end()),
                     *std::max_element(c.begin(), c.end())});
    }
  }
  return merge_intervals(out);
}

/// w(eta, chi) = int H(y, chi) eta(y) d^x y, the double-Mellin weight.
inline IntegrationResult w_eta_chi(const ArchCharacter& eta,
                                   const ArchCharacter& chi,
                                   const BivariateWeight& h,
                                   const QuadratureSpec& spec = {}) {
  IntegrationResult total;
  if (h.zero()) return total;
  for (const auto& iv : H_support(h)) {
    auto f = [&](double y) -> Complex {
      const IntegrationResult inner = H_of(y, chi, h, spec);
      return inner.value * eta(y) / std::abs(y);
    };
    total += integrate_gl(f, iv.lo, iv.hi, spec);
  }
  return total;
}

/// Forward transform of Theorem-1 type:
///   h^vee(pi, y) = int_{Re chi = sigma} gamma(1/2, pi x chi)
///     gamma(1, pi_1 x conj(chi_2)^{-1} x chi^{-1})
///     int h(yt, y(t-1)) chi^{-1}(t) conj(chi_2)((t-1)/t) |t/(t-1)|^{1/2}
///         d^x t  dchi,
/// with the character measure (1/2) sum_delta int dv/(2 pi).
inline ContourResult h_vee(const ArchRep& pi, double y,
                           const BivariateWeight& h, const ArchRep& pi1,
                           const ArchRep& pi2, const ContourSpec& contour) {
  if (y == 0.0) throw std::domain_error("h_vee: y must be nonzero");
  detail::require_principal_pi2(pi2);
  const double th = pi.theta(), th1 = pi1.theta(), th2 = pi2.theta();
  if (th1 + th2 + th >= 0.5) {
    throw std::invalid_argument("h_vee: need theta_1 + theta_2 + theta < 1/2");
  }
  detail::check_strip(contour.sigma, th1 + th2, 0.5 - th, "h_vee");
  ContourResult out;
  if (h.zero()) return out;

  // t-range: y t in supp1 and y (t-1) in supp2
  const IntervalList ts = intersect_intervals(
      scale_intervals(h.factor1.support(), 1.0 / y),
      shift_intervals(scale_intervals(h.factor2.support(), 1.0 / y), 1.0));
  if (ts.empty()) return out;

  detail::MellinData md;
  detail::foreach_gl_node(ts, contour.mellin_panels, [&](double t, double w) {
    const double hv = h(y * t, y * (t - 1.0));
    if (hv == 0.0) return;
    const double ratio = (t - 1.0) / t;
    Complex phi = hv * detail::conj_chi2(pi2, ratio) /
                  std::sqrt(std::abs(ratio)) / std::abs(t);
    md.logt.push_back(std::log(std::abs(t)));
    md.coef0.push_back(w * phi);
    md.coef1.push_back(w * phi * sgn_pow(t, 1));
  });
  if (md.empty()) return out;

  const Complex w_fwd = forward_twist_exponent(pi2);
  const double sigma = contour.sigma;
  // fold |t|^{-sigma} into the coefficients once
  detail::MellinData ms = md;
  for (size_t i = 0; i < ms.logt.size(); ++i) {
    const double damp = std::exp(-sigma * ms.logt[i]);
    ms.coef0[i] *= damp;
    ms.coef1[i] *= damp;
  }
  auto integrand = [&](double v) -> Complex {
    Complex total{0.0, 0.0};
    for (int delta : {0, 1}) {
      const ArchCharacter chi{Complex{sigma, v}, delta};
      const Complex T = ms.eval(Complex{0.0, -v}, delta);
      total += gamma_half(pi, chi) *
               gamma_one_twisted(pi1, pi2.eta(), w_fwd, chi) * T;
    }
    return total;
  };
  out = integrate_vertical(integrand, contour.im_cutoff, contour.quadrature);
  out.value /= 4.0 * kPi;
  out.tail_estimate /= 4.0 * kPi;
  out.quad_error /= 4.0 * kPi;
  return out;
}

namespace detail {

/// Precomputed y-integral data for the Theorem-2 forward transform.
/// Regular nodes carry |1-y|^{tau} through log_one_minus_y; the cells
/// adjacent to y = 1 carry Chebyshev-in-monomial coefficients against
/// the exact moments int_0^rho u^{tau + tau0 - 1} u^j du.
struct SharpData {
  std::vector<double> log1my;
  std::vector<Complex> coef0, coef1;
  struct Cell {
    std::vector<Complex> q;  // monomial coefficients of the smooth part
    double rho = 0.0;
    double log_rho = 0.0;
    bool negative_side = false;  // y > 1, i.e. sgn(1-y) = -1
  };
  std::vector<Cell> cells;
  Complex tau0{0.0, 0.0};
  int delta0 = 0;

  Complex eval(Complex tau, int delta) const {
    CompensatedComplexSum acc;
    const auto& c = delta ? coef1 : coef0;
    for (size_t i = 0; i < log1my.size(); ++i) {
      acc.add(c[i] * std::exp(tau * log1my[i]));
    }
    for (const auto& cell : cells) {
      const Complex cc = tau + tau0;
      Complex rp = std::exp(cc * cell.log_rho);
      Complex cell_sum{0.0, 0.0};
      for (size_t j = 0; j < cell.q.size(); ++j) {
        cell_sum += cell.q[j] * rp / (cc + static_cast<double>(j));
        rp *= cell.rho;
      }
      if (cell.negative_side && (((delta + delta0) & 1) != 0)) cell_sum = -cell_sum;
      acc.add(cell_sum);
    }
    return acc.value();
  }
  bool empty() const { return log1my.empty() && cells.empty(); }
};

/// Assemble the y-integral data for
///   U(chi) = int H(y, chi0) chi0(1-y) chi(1-y) conj(chi_2)(y)
///            sqrt|y|/|1-y| d^x y.
inline SharpData build_sharp_data(const std::function<Complex(double)>& Hfn,
                                  const IntervalList& ysupp,
                                  const ArchCharacter& chi0,
                                  const ArchRep& pi2, const ContourSpec& cont) {
  SharpData sd;
  sd.tau0 = chi0.tau;
  sd.delta0 = chi0.delta;
  // smooth factor without chi(1-y), chi0-power and the 1/|1-y|:
  auto smooth = [&](double yy) -> Complex {
    const Complex Hv = Hfn(yy);
    if (Hv == Complex{0.0, 0.0}) return Hv;
    return Hv * conj_chi2(pi2, yy) * std::sqrt(std::abs(yy)) / std::abs(yy);
  };
  const double rho_max = 0.125;
  IntervalList regular;
  for (const auto& iv : ysupp) {
    const bool crosses = iv.lo < 1.0 && iv.hi > 1.0;
    const bool ends_at_one = iv.hi == 1.0 || iv.lo == 1.0;
    if (!crosses && !ends_at_one) {
      regular.push_back(iv);
      continue;
    }
    double below_lo = std::min(iv.lo, 1.0), below_hi = std::min(iv.hi, 1.0);
    double above_lo = std::max(iv.lo, 1.0), above_hi = std::max(iv.hi, 1.0);
    if (below_hi > below_lo) {
      const double rho = std::min(rho_max, below_hi - below_lo);
      if (below_hi == 1.0) {
        SharpData::Cell cell;
        cell.rho = rho;
        cell.log_rho = std::log(rho);
        cell.negative_side = false;
        // g(u) = smooth(1-u)
        cell.q = chebyshev_monomial_fit(
            [&](double u) { return smooth(1.0 - u); }, rho);
        sd.cells.push_back(std::move(cell));
        if (below_lo < 1.0 - rho) regular.push_back({below_lo, 1.0 - rho});
      } else {
        regular.push_back({below_lo, below_hi});
      }
    }
    if (above_hi > above_lo) {
      const double rho = std::min(rho_max, above_hi - above_lo);
      if (above_lo == 1.0) {
        SharpData::Cell cell;
        cell.rho = rho;
        cell.log_rho = std::log(rho);
        cell.negative_side = true;
        cell.q = chebyshev_monomial_fit(
            [&](double u) { return smooth(1.0 + u); }, rho);
        sd.cells.push_back(std::move(cell));
        if (above_hi > 1.0 + rho) regular.push_back({1.0 + rho, above_hi});
      } else {
        regular.push_back({above_lo, above_hi});
      }
    }
  }
  foreach_gl_node(regular, cont.mellin_panels, [&](double yy, double w) {
    const Complex sv = smooth(yy);
    if (sv == Complex{0.0, 0.0}) return;
    const double omy = 1.0 - yy;
    // chi0(1-y)/|1-y| without the chi-dependent |1-y|^{tau} part
    const Complex base =
        sv * sgn_pow(omy, chi0.delta) *
        std::exp((chi0.tau - 1.0) * std::log(std::abs(omy)));
    sd.log1my.push_back(std::log(std::abs(omy)));
    sd.coef0.push_back(w * base);
    sd.coef1.push_back(w * base * sgn_pow(omy, 1));
  });
  return sd;
}

}  // namespace detail

/// General-path Theorem-2 forward transform from a directly supplied
/// H(., chi0); the h-based entry point computes H by quadrature.
inline ContourResult h_sharp_from_H(const ArchRep& pi,
                                    const ArchCharacter& chi0,
                                    const std::function<Complex(double)>& Hfn,
                                    const IntervalList& ysupp,
                                    const ArchRep& pi1, const ArchRep& pi2,
                                    const ContourSpec& contour,
                                    bool allow_fast_path = true);

/// h^sharp(pi, chi0) per Theorem 2(1) with the appendix residue fast
/// path taken automatically when it applies.
inline ContourResult h_sharp(const ArchRep& pi, const ArchCharacter& chi0,
                             const BivariateWeight& h, const ArchRep& pi1,
                             const ArchRep& pi2, const ContourSpec& contour,
                             bool allow_fast_path = true) {
  detail::require_principal_pi2(pi2);
  ContourResult out;
  if (h.zero()) return out;
  QuadratureSpec hq = contour.quadrature;
  auto Hfn = [&, hq](double y) -> Complex {
    return H_of(y, chi0, h, hq).value;
  };
  return h_sharp_from_H(pi, chi0, Hfn, H_support(h), pi1, pi2, contour,
                        allow_fast_path);
}

namespace detail {

inline bool near_zero_even_principal(const ArchRep& rep) {
  return rep.is_principal() && rep.eta() == 0 && std::abs(rep.r()) < 1e-14;
}

enum class SupportRegion { kUnitInterval, kBeyondOne, kNegative, kMixed };

inline SupportRegion classify_support(const IntervalList& ivs) {
  bool in01 = true, beyond = true, neg = true;
  for (const auto& iv : ivs) {
    in01 = in01 && iv.lo > 0.0 && iv.hi < 1.0;
    beyond = beyond && iv.lo > 1.0;
    neg = neg && iv.hi < 0.0;
  }
  if (in01) return SupportRegion::kUnitInterval;
  if (beyond) return SupportRegion::kBeyondOne;
  if (neg) return SupportRegion::kNegative;
  return SupportRegion::kMixed;
}

}  // namespace detail

inline ContourResult h_sharp_from_H(const ArchRep& pi,
                                    const ArchCharacter& chi0,
                                    const std::function<Complex(double)>& Hfn,
                                    const IntervalList& ysupp,
                                    const ArchRep& pi1, const ArchRep& pi2,
                                    const ContourSpec& contour,
                                    bool allow_fast_path) {
  detail::require_principal_pi2(pi2);
  const double th = pi.theta(), th1 = pi1.theta();
  if (th1 + th >= 0.5) {
    throw std::invalid_argument("h_sharp: need theta_1 + theta < 1/2");
  }
  if (chi0.real_part() <= -0.5) {
    throw std::invalid_argument("h_sharp: need Re(chi_0) > -1/2");
  }
  detail::check_strip(contour.sigma, th1, 0.5 - th, "h_sharp");
  ContourResult out;
  if (ysupp.empty()) return out;

  // Residue fast path: trivial chi0, spectral-parameter-0 even pair
  // (pi_1, pi_2), principal even pi, support in one appendix region.
  if (allow_fast_path && chi0.is_trivial() && pi.is_principal() &&
      pi.eta() == 0 && std::abs(pi.r().imag()) < 1e-14 &&
      detail::near_zero_even_principal(pi1) &&
      detail::near_zero_even_principal(pi2)) {
    const auto region = detail::classify_support(ysupp);
    const double r = pi.r().real();
    if (region == detail::SupportRegion::kUnitInterval) {
      // h_sharp = (1/2) int phi(u) Kres(r, 1-u) du, phi = H/sqrt|.|
      IntegrationResult total;
      for (const auto& iv : ysupp) {
        auto f = [&](double u) -> Complex {
          const Complex Hv = Hfn(u);
          if (Hv == Complex{0.0, 0.0}) return Hv;
          return Hv / std::sqrt(u) * residue_kernel(r, 1.0 - u);
        };
        total += integrate_gl(f, iv.lo, iv.hi, contour.quadrature);
      }
      out.value = 0.5 * total.value;
      out.quad_error = 0.5 * total.error;
      out.converged = total.converged;
      return out;
    }
    if (region == detail::SupportRegion::kBeyondOne) {
      // h_sharp = (1/2) int phi(1+u) KresNeg(r, u) du
      IntegrationResult total;
      for (const auto& iv : ysupp) {
        auto f = [&](double s) -> Complex {
          const Complex Hv = Hfn(s);
          if (Hv == Complex{0.0, 0.0}) return Hv;
          return Hv / std::sqrt(s) * residue_kernel_neg(r, s - 1.0);
        };
        total += integrate_gl(f, iv.lo, iv.hi, contour.quadrature);
      }
      out.value = 0.5 * total.value;
      out.quad_error = 0.5 * total.error;
      out.converged = total.converged;
      return out;
    }
    // negative support: the y-integrand is regular (|1-y| >= 1), fall
    // through to the general contour path.
  }

  const detail::SharpData sd =
      detail::build_sharp_data(Hfn, ysupp, chi0, pi2, contour);
  if (sd.empty()) return out;
  const Complex w_fwd = forward_twist_exponent(pi2);
  const double sigma = contour.sigma;
  auto integrand = [&](double v) -> Complex {
    Complex total{0.0, 0.0};
    for (int delta : {0, 1}) {
      const ArchCharacter chi{Complex{sigma, v}, delta};
      total += gamma_half(pi, chi) *
               gamma_one_twisted(pi1, pi2.eta(), w_fwd, chi) *
               sd.eval(chi.tau, delta);
    }
    return total;
  };
  out = integrate_vertical(integrand, contour.im_cutoff, contour.quadrature);
  out.value /= 4.0 * kPi;
  out.tail_estimate /= 4.0 * kPi;
  out.quad_error /= 4.0 * kPi;
  return out;
}

namespace detail {

// (declared above; definition here so build_sharp_data can call it)
inline std::vector<Complex> chebyshev_monomial_fit(
    const std::function<Complex(double)>& g, double rho, int degree) {
  const int n = degree + 1;
  std::vector<Complex> vals(n);
  for (int j = 0; j < n; ++j) {
    const double x = std::cos(kPi * (j + 0.5) / n);
    vals[j] = g(0.5 * rho * (x + 1.0));
  }
  std::vector<Complex> cheb(n);
  for (int k = 0; k < n; ++k) {
    Complex s{0.0, 0.0};
    for (int j = 0; j < n; ++j) s += vals[j] * std::cos(kPi * k * (j + 0.5) / n);
    cheb[k] = s * (2.0 / n);
  }
  cheb[0] *= 0.5;
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
  return q;
}

}  // namespace detail

/// Vtilde(t) = int_0^infty K(t, y) V(y) dy for V supported in (0,infty).
inline IntegrationResult motohashi_tilde(const TestFunction& V, double t,
                                         const QuadratureSpec& spec = {}) {
  IntegrationResult total;
  if (V.zero()) return total;
  for (const auto& iv : V.support()) {
    if (iv.lo <= 0.0) {
      throw std::invalid_argument("motohashi_tilde: V must be supported in (0,inf)");
    }
    auto f = [&](double y) -> Complex {
      const double v = V(y);
      if (v == 0.0) return {0.0, 0.0};
      return v * kernel_K(Complex{t, 0.0}, y);
    };
    total += integrate_gl(f, iv.lo, iv.hi, spec);
  }
  return total;
}

/// Vcheck(t) = 2 int_0^infty (int V(x) cos(x log((y+1)/y)) dx)
///             K(t,y) dy / sqrt(y(1+y)),
/// with V given directly as an even, decaying spectral weight.
inline IntegrationResult motohashi_check_direct(const TestFunction& V, double t,
                                                const QuadratureSpec& spec = {}) {
  IntegrationResult total;
  if (V.zero()) return total;
  auto inner = [&](double y) -> Complex {
    const double freq = std::log((y + 1.0) / y);
    IntegrationResult r;
    for (const auto& iv : V.support()) {
      r += integrate_gl(
          [&](double x) -> Complex { return V(x) * std::cos(x * freq); },
          iv.lo, iv.hi, spec);
    }
    return r.value;
  };
  // substitute y = e^w; the integrand then decays exponentially both ways
  auto g = [&](double w) -> Complex {
    const double y = std::exp(w);
    const Complex ix = inner(y);
    if (std::abs(ix) < 1e-280) return {0.0, 0.0};
    return 2.0 * ix * kernel_K(Complex{t, 0.0}, y) * y / std::sqrt(y * (1.0 + y));
  };
  // walk panels outward; the inner transform dies superpolynomially left
  // of w ~ -(a few), the kernel weight exponentially to the right
  double mag_scale = 0.0;
  for (double lo = 0.0; lo < 60.0; lo += 4.0) {
    IntegrationResult part = integrate_gl(g, lo, lo + 4.0, spec);
    total += part;
    mag_scale = std::max(mag_scale, std::abs(part.value));
    if (std::abs(part.value) < spec.abs_tol + spec.rel_tol * mag_scale) break;
  }
  for (double hi = 0.0; hi > -40.0; hi -= 2.0) {
    IntegrationResult part = integrate_gl(g, hi - 2.0, hi, spec);
    total += part;
    mag_scale = std::max(mag_scale, std::abs(part.value));
    if (std::abs(part.value) < spec.abs_tol + spec.rel_tol * mag_scale) break;
  }
  return total;
}

/// Same transform with V the Mellin image of a one-variable weight phi:
///   V(x) = int phi(z) |z|^{1/2} |z|^{-ix} d^x z.
/// The inner x-integral then collapses to point evaluations of phi.
inline IntegrationResult motohashi_check_mellin(const TestFunction& phi,
                                                double t,
                                                const QuadratureSpec& spec = {}) {
  IntegrationResult total;
  if (phi.zero()) return total;
  auto inner_closed = [&](double y) -> double {
    const double w = 1.0 + 1.0 / y;
    double s = 0.0;
    for (int s1 : {+1, -1}) {
      const double arg = (s1 > 0) ? w : 1.0 / w;
      const double root = std::sqrt(arg);
      for (int s2 : {+1, -1}) {
        s += root * phi(s2 * arg);
      }
    }
    return kPi * s;
  };
  // y-support: (1+1/y)^{pm 1} must land in |supp(phi)|.
  // On (1,inf): w = 1+1/y, so y = 1/(w-1) (decreasing);
  // on (0,1):  w = y/(y+1), so y = w/(1-w) (increasing).
  IntervalList mag;
  for (const auto& iv : phi.support()) {
    if (iv.hi < 0.0) {
      mag.push_back({-iv.hi, -iv.lo});
    } else {
      mag.push_back(iv);
    }
  }
  mag = merge_intervals(mag);
  IntervalList ys;
  for (const auto& iv : mag) {
    if (iv.hi > 1.0) {
      const double a = std::max(iv.lo, 1.0 + 1e-9);
      if (iv.hi > a) ys.push_back({1.0 / (iv.hi - 1.0), 1.0 / (a - 1.0)});
    }
    if (iv.lo < 1.0) {
      const double b = std::min(iv.hi, 1.0 - 1e-9);
      if (b > iv.lo) ys.push_back({iv.lo / (1.0 - iv.lo), b / (1.0 - b)});
    }
  }
  ys = merge_intervals(ys);
  for (const auto& iv : ys) {
    auto f = [&](double y) -> Complex {
      const double ix = inner_closed(y);
      if (ix == 0.0) return {0.0, 0.0};
      return 2.0 * ix * kernel_K(Complex{t, 0.0}, y) / std::sqrt(y * (1.0 + y));
    };
    total += integrate_gl(f, iv.lo, iv.hi, spec);
  }
  return total;
}

/// The single-integral closed form of the checked transform:
///   Vcheck(r) = pi sum_pm int phi(t) |1/|t|-1|^{pm ir}
///     Gamma(1/2 pm ir)^2/Gamma(1 pm 2ir)
///     F(1/2 pm ir, 1/2 pm ir, 1 pm 2ir, 1 - 1/|t|)
///     (1 pm i/sinh(pi r)) dt / sqrt|t(|t|-1)|.
inline IntegrationResult vcheck_closed_form(const TestFunction& phi, double r,
                                            const QuadratureSpec& spec = {}) {
  IntegrationResult total;
  for (const auto& iv : phi.support()) {
    auto f = [&](double t) -> Complex {
      const double pv = phi(t);
      if (pv == 0.0) return {0.0, 0.0};
      const double at = std::abs(t);
      const double arg = 1.0 - 1.0 / at;
      const Complex kern =
          2.0 * pm_combined(Complex{r, 0.0}, std::log(std::abs(1.0 / at - 1.0)), arg);
      return kPi * pv * kern / std::sqrt(std::abs(t * (at - 1.0)));
    };
    total += integrate_gl(f, iv.lo, iv.hi, spec);
  }
  return total;
}

/// Rapidly decaying even spectral weight for the checked transform,
/// given either directly or as the Mellin image of a one-variable
/// weight (V(x) = int phi(z)|z|^{1/2}|z|^{-ix} d^x z).
struct SpectralWeight {
  enum class Mode { kDirect, kMellinImage };
  Mode mode = Mode::kMellinImage;
  TestFunction fn;

  static SpectralWeight direct(TestFunction f) {
    return {Mode::kDirect, std::move(f)};
  }
  static SpectralWeight mellin_image(TestFunction f) {
    return {Mode::kMellinImage, std::move(f)};
  }
};

inline IntegrationResult motohashi_check(const SpectralWeight& V, double t,
                                         const QuadratureSpec& spec = {}) {
  if (V.mode == SpectralWeight::Mode::kDirect) {
    return motohashi_check_direct(V.fn, t, spec);
  }
  return motohashi_check_mellin(V.fn, t, spec);
}

struct AppendixCheckResult {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double residual = 0.0;
};

/// Compare Vcheck(r) with pi * h_sharp(pi_{r,even}, triv) when the
/// one-variable weight phi is supported in a single region among
/// (0,1), (1,inf), (-inf,0).
inline AppendixCheckResult appendix_check(const TestFunction& phi, double r,
                                          const QuadratureSpec& spec = {},
                                          double im_cutoff = 120.0) {
  AppendixCheckResult res;
  if (phi.zero()) return res;
  const auto region = detail::classify_support(phi.support());
  if (region == detail::SupportRegion::kMixed) {
    throw std::invalid_argument(
        "appendix_check: phi must be supported in one of (0,1), (1,inf), (-inf,0)");
  }
  res.lhs = vcheck_closed_form(phi, r, spec).value;
  ContourSpec contour;
  contour.quadrature = spec;
  contour.im_cutoff = im_cutoff;
  const ArchRep pi = ArchRep::principal(Complex{r, 0.0}, 0);
  const ArchRep zero = ArchRep::principal(Complex{0.0, 0.0}, 0);
  // The spectral weight V sees H only through parity-even characters,
  // so a weight on the negative axis contributes as its reflection.
  const TestFunction folded =
      (region == detail::SupportRegion::kNegative) ? phi.reflected() : phi;
  auto Hfn = [&](double y) -> Complex {
    const double pv = folded(y);
    return Complex{pv * std::sqrt(std::abs(y)), 0.0};
  };
  res.rhs = kPi * h_sharp_from_H(pi, ArchCharacter::trivial(), Hfn,
                                 folded.support(), zero, zero, contour)
                      .value;
  const double scale =
      std::max({std::abs(res.lhs), std::abs(res.rhs), 1e-300});
  res.residual = std::abs(res.lhs - res.rhs) / scale;
  return res;
}

}  // namespace spgl2::arch
