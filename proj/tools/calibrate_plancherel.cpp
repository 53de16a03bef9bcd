// Derives the global Plancherel proportionality constant by requiring
// the Theorem-1 round trip to reproduce h(1, 1/2) for a reference bump
// pair, then reports reconstruction quality at independent points.
// The resulting constant is frozen in include/spgl2/arch/plancherel.hpp.

#include <cstdio>
#include <thread>

#include "spgl2/arch/inversion.hpp"

using namespace spgl2;
using namespace spgl2::arch;

int main(int argc, char** argv) {
  thread_count() = static_cast<int>(std::thread::hardware_concurrency());
  double r_cut = 40.0;
  int k_cut = 40;
  double cutoff_grid = 150.0, cutoff_inv = 80.0;
  if (argc > 1) r_cut = std::atof(argv[1]);
  if (argc > 2) cutoff_grid = std::atof(argv[2]);
  if (argc > 3) cutoff_inv = std::atof(argv[3]);

  BivariateWeight h{TestFunction::bump(1.0, 0.5), TestFunction::bump(0.5, 0.25)};
  const auto pi1 = ArchRep::principal(Complex{0.0, 0.0}, 0);
  const auto pi2 = ArchRep::principal(Complex{0.0, 0.0}, 0);

  ContourSpec cg;
  cg.im_cutoff = cutoff_grid;
  cg.quadrature.rel_tol = 1e-9;
  std::printf("building h_vee grid (r_cut=%.0f, k_cut=%d)...\n", r_cut, k_cut);
  const double z = 0.5;
  auto grid = build_hvee_grid(h, z, pi1, pi2, cg, r_cut, k_cut, 2.0);
  std::printf("grid tail indicator: %.3e\n", grid.tail_indicator());
  for (size_t i = 0; i < grid.nodes.size(); i += 30) {
    std::printf("  r=%7.3f  |hvee_even|=%.3e  |hvee_odd|=%.3e\n", grid.nodes[i],
                std::abs(grid.even[i]), std::abs(grid.odd[i]));
  }
  for (size_t j = 0; j < grid.disc.size(); j += 5) {
    std::printf("  k=%zu |hvee_disc|=%.3e\n", 2 * (j + 1), std::abs(grid.disc[j]));
  }

  ContourSpec ci;
  ci.im_cutoff = cutoff_inv;
  ci.quadrature.rel_tol = 1e-9;
  auto rec = invert_h(1.0, 0.5, grid, pi1, pi2, ci);
  const double target = h(1.0, 0.5);
  std::printf("reconstruction with C=%.17g: %.12g %+.3e i (tail %.2e)\n",
              kPlancherelConstant, rec.value.real(), rec.value.imag(),
              rec.tail_estimate);
  std::printf("target h(1,0.5) = %.12g\n", target);
  std::printf("=> calibrated constant = %.17g\n",
              kPlancherelConstant * target / rec.value.real());

  // independent verification points with the frozen constant
  for (double y1 : {0.9, 1.2}) {
    for (double y2 : {0.4, 0.55}) {
      auto g2 = build_hvee_grid(h, y1 - y2, pi1, pi2, cg, r_cut, k_cut, 2.0);
      auto r2 = invert_h(y1, y2, g2, pi1, pi2, ci);
      const double t2 = h(y1, y2);
      std::printf("  (%.2f, %.2f): rec=%.8g target=%.8g rel=%.2e\n", y1, y2,
                  r2.value.real(), t2,
                  std::abs(r2.value - Complex{t2, 0.0}) /
                      std::max(1e-300, std::abs(t2)));
    }
  }
  return 0;
}
