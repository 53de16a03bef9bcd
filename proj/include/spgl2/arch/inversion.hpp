#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spgl2/arch/characters.hpp"
#include "spgl2/arch/gamma_factors.hpp"
#include "spgl2/arch/plancherel.hpp"
#include "spgl2/arch/transforms.hpp"
#include "spgl2/bump.hpp"
#include "spgl2/util/threads.hpp"

namespace spgl2::arch {

/// Forward-transform values tabulated over the truncated tempered dual:
/// principal series at composite-GL nodes on [0, r_cut] per parity,
/// discrete series for even weights up to k_cut.
struct SpectralGrid {
  double r_cut = 40.0;
  int k_cut = 40;
  std::vector<double> nodes;    // r-values (shared by both parities)
  std::vector<double> weights;  // GL weights against dr
  std::vector<Complex> even;    // transform at pi_{r,0}
  std::vector<Complex> odd;     // transform at pi_{r,1}
  std::vector<Complex> disc;    // transform at pi_k, k = 2, 4, ..., k_cut

  /// Crude tail indicator: largest transform magnitude near the cut.
  double tail_indicator() const {
    double m = 0.0;
    const size_t from = nodes.size() - std::min<size_t>(nodes.size(), 8);
    for (size_t i = from; i < nodes.size(); ++i) {
      m = std::max({m, std::abs(even[i]), std::abs(odd[i])});
    }
    return m;
  }

  /// Restriction to a smaller cut (node subsets stay GL-consistent only
  /// down to panel boundaries; r_sub must divide the panel layout).
  SpectralGrid truncated(double r_sub, int k_sub) const {
    SpectralGrid g;
    g.r_cut = r_sub;
    g.k_cut = k_sub;
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] <= r_sub) {
        g.nodes.push_back(nodes[i]);
        g.weights.push_back(weights[i]);
        g.even.push_back(even[i]);
        g.odd.push_back(odd[i]);
      }
    }
    const int nd = std::min<int>(disc.size(), std::max(0, (k_sub - 2) / 2 + 1));
    g.disc.assign(disc.begin(), disc.begin() + nd);
    return g;
  }
};

namespace detail {

inline void grid_nodes(double r_cut, double panel_width,
                       std::vector<double>& nodes, std::vector<double>& weights) {
  using spgl2::detail::kGL15Nodes;
  using spgl2::detail::kGL15Weights;
  const int panels = std::max(1, static_cast<int>(std::ceil(r_cut / panel_width)));
  const double h = r_cut / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h, half = 0.5 * h;
    // symmetric GL15 nodes, ascending order for reproducibility
    for (int i = 7; i >= 1; --i) {
      nodes.push_back(mid - half * kGL15Nodes[i]);
      weights.push_back(half * kGL15Weights[i]);
    }
    nodes.push_back(mid);
    weights.push_back(half * kGL15Weights[0]);
    for (int i = 1; i <= 7; ++i) {
      nodes.push_back(mid + half * kGL15Nodes[i]);
      weights.push_back(half * kGL15Weights[i]);
    }
  }
}

}  // namespace detail

/// Tabulate h^vee(pi, z) over the truncated tempered dual.
inline SpectralGrid build_hvee_grid(const BivariateWeight& h, double z,
                                    const ArchRep& pi1, const ArchRep& pi2,
                                    const ContourSpec& contour,
                                    double r_cut = 40.0, int k_cut = 40,
                                    double panel_width = 2.0) {
  SpectralGrid g;
  g.r_cut = r_cut;
  g.k_cut = k_cut;
  detail::grid_nodes(r_cut, panel_width, g.nodes, g.weights);
  g.even.resize(g.nodes.size());
  g.odd.resize(g.nodes.size());
  parallel_for(g.nodes.size(), [&](size_t i) {
    const Complex r{g.nodes[i], 0.0};
    g.even[i] = h_vee(ArchRep::principal(r, 0), z, h, pi1, pi2, contour).value;
    g.odd[i] = h_vee(ArchRep::principal(r, 1), z, h, pi1, pi2, contour).value;
  });
  const int nd = std::max(0, (k_cut - 2) / 2 + 1);
  g.disc.resize(nd);
  parallel_for(nd, [&](size_t j) {
    g.disc[j] = h_vee(ArchRep::discrete(2 * (static_cast<int>(j) + 1)), z, h,
                      pi1, pi2, contour).value;
  });
  return g;
}

/// Tabulate h^sharp(pi, chi0) the same way.
inline SpectralGrid build_hsharp_grid(const BivariateWeight& h,
                                      const ArchCharacter& chi0,
                                      const ArchRep& pi1, const ArchRep& pi2,
                                      const ContourSpec& contour,
                                      double r_cut = 40.0, int k_cut = 40,
                                      double panel_width = 2.0) {
  SpectralGrid g;
  g.r_cut = r_cut;
  g.k_cut = k_cut;
  detail::grid_nodes(r_cut, panel_width, g.nodes, g.weights);
  g.even.resize(g.nodes.size());
  g.odd.resize(g.nodes.size());
  parallel_for(g.nodes.size(), [&](size_t i) {
    const Complex r{g.nodes[i], 0.0};
    g.even[i] =
        h_sharp(ArchRep::principal(r, 0), chi0, h, pi1, pi2, contour).value;
    g.odd[i] =
        h_sharp(ArchRep::principal(r, 1), chi0, h, pi1, pi2, contour).value;
  });
  const int nd = std::max(0, (k_cut - 2) / 2 + 1);
  g.disc.resize(nd);
  parallel_for(nd, [&](size_t j) {
    g.disc[j] = h_sharp(ArchRep::discrete(2 * (static_cast<int>(j) + 1)), chi0,
                        h, pi1, pi2, contour).value;
  });
  return g;
}

namespace detail {

/// Plancherel-weighted pairing of grid values with gamma(1/2, pi x chi):
/// the inner integral of the inversion formulas, evaluated first as the
/// outer chi-integral is not absolutely convergent jointly.
inline Complex plancherel_pairing(const SpectralGrid& g,
                                  const ArchCharacter& chi) {
  CompensatedComplexSum acc;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    const double r = g.nodes[i];
    const Complex ghe =
        gamma_half(ArchRep::principal(Complex{r, 0.0}, 0), chi);
    const Complex gho =
        gamma_half(ArchRep::principal(Complex{r, 0.0}, 1), chi);
    acc.add(g.weights[i] * (plancherel_density_even(r) * ghe * g.even[i] +
                            plancherel_density_odd(r) * gho * g.odd[i]));
  }
  for (size_t j = 0; j < g.disc.size(); ++j) {
    const int k = 2 * (static_cast<int>(j) + 1);
    acc.add(plancherel_mass_discrete(k) *
            gamma_half(ArchRep::discrete(k), chi) * g.disc[j]);
  }
  return acc.value();
}

}  // namespace detail

/// Theorem-1 inversion: reconstruct h(y1, y2) from tabulated
/// h^vee(., y1 - y2).
inline ContourResult invert_h(double y1, double y2, const SpectralGrid& grid,
                              const ArchRep& pi1, const ArchRep& pi2,
                              const ContourSpec& contour) {
  if (y1 == 0.0 || y2 == 0.0) {
    throw std::domain_error("invert_h: y1, y2 must be nonzero");
  }
  if (y1 == y2) {
    throw std::domain_error("invert_h: y1 = y2 is outside the formula's domain");
  }
  detail::require_principal_pi2(pi2);
  detail::check_strip(contour.sigma, pi1.theta() + pi2.theta(), 0.5, "invert_h");

  const double x = 1.0 - y2 / y1;
  const Complex w_inv = inverse_twist_exponent(pi2);
  const double sigma = contour.sigma;
  auto integrand = [&](double v) -> Complex {
    Complex total{0.0, 0.0};
    for (int delta : {0, 1}) {
      const ArchCharacter chi{Complex{sigma, v}, delta};
      const Complex inner = detail::plancherel_pairing(grid, chi);
      total += chi(x) * gamma_one_twisted(pi1, pi2.eta(), w_inv, chi) * inner;
    }
    return total;
  };
  ContourResult out =
      integrate_vertical(integrand, contour.im_cutoff, contour.quadrature);
  const Complex pref = detail::conj_chi2(pi2, y1 / y2) *
                       std::sqrt(std::abs(y1 * y2)) / std::abs(y1 - y2);
  out.value *= pref / (4.0 * kPi);
  out.tail_estimate *= std::abs(pref) / (4.0 * kPi);
  out.quad_error *= std::abs(pref) / (4.0 * kPi);
  return out;
}

/// Theorem-2 inversion: reconstruct H(y, chi0) from tabulated
/// h^sharp(., chi0).
inline ContourResult invert_H(double y, const ArchCharacter& chi0,
                              const SpectralGrid& grid, const ArchRep& pi1,
                              const ArchRep& pi2, const ContourSpec& contour) {
  if (y == 0.0 || y == 1.0) {
    throw std::domain_error("invert_H: need y outside {0, 1}");
  }
  if (chi0.real_part() <= -0.5) {
    throw std::invalid_argument("invert_H: need Re(chi_0) > -1/2");
  }
  detail::require_principal_pi2(pi2);
  detail::check_strip(contour.sigma, pi1.theta(), 0.5, "invert_H");

  const double omy = 1.0 - y;
  const Complex w_inv = inverse_twist_exponent(pi2);
  const double sigma = contour.sigma;
  auto integrand = [&](double v) -> Complex {
    Complex total{0.0, 0.0};
    for (int delta : {0, 1}) {
      const ArchCharacter chi{Complex{sigma, v}, delta};
      const Complex inner = detail::plancherel_pairing(grid, chi);
      total += chi(omy) * gamma_one_twisted(pi1, pi2.eta(), w_inv, chi) * inner;
    }
    return total;
  };
  ContourResult out =
      integrate_vertical(integrand, contour.im_cutoff, contour.quadrature);
  // conj(chi_2^{-1}(y)) = chi_2(y) for unitary chi_2
  const Complex chi2_y = std::exp(kI * std::conj(pi2.r()) *
                                  std::log(std::abs(y))) *
                         sgn_pow(y, pi2.eta());
  const Complex pref =
      chi2_y * std::sqrt(std::abs(y)) / (chi0(omy) * std::abs(omy));
  out.value *= pref / (4.0 * kPi);
  out.tail_estimate *= std::abs(pref) / (4.0 * kPi);
  out.quad_error *= std::abs(pref) / (4.0 * kPi);
  return out;
}

}  // namespace spgl2::arch
