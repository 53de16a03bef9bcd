// Frozen high-precision reference values for the test suite.
// Regenerate with: python3 tools/gen_reference_values.py > tests/reference_values.hpp
#pragma once
#include <complex>

namespace spgl2::ref {

inline const std::complex<double> kLogGamma_3_4i{-1.756626784603784110531, 4.742664438034657928195};  // log Gamma(3+4i), principal branch
inline const std::complex<double> kLogGamma_m0p3_50i{-80.75051701074128041084, 144.3389466224817419987};  // log Gamma(-0.3+50i)
inline const std::complex<double> kLogGamma_12_m7i{15.48806734014356624085, -17.4892504007367515882};  // log Gamma(12-7i)
inline const std::complex<double> kGammaR_half_3i{-0.1601166355526311403819, -0.02371273646973786477214};  // Gamma_R(1/2+3i)
inline const std::complex<double> kGammaR_2_m5i{-0.01691445694704990041065, 0.01821389106114383842772};  // Gamma_R(2-5i)
inline const std::complex<double> kHyp_m3{-0.02747693638575279469603, -0.7020699486540462487163};  // 2F1(1/2+2i,1/2+2i;1+4i;-3)
inline const std::complex<double> kHyp_0p3{1.029689069495894751919, 0.3660806024368415540263};
inline const std::complex<double> kHyp_m0p7{0.7394903105131222180097, -0.4677155352566435825315};
inline const std::complex<double> kHyp_0p9{-0.2352213485829707862587, 1.728364041762956244657};
inline const std::complex<double> kHyp_m40{0.1591406228061776504409, 0.3367331755999373661739};  // far-negative argument
inline const std::complex<double> kHyp_bigim{-0.8529508677158089448534, 0.2510281362123654169734};  // large imaginary parameters
inline const std::complex<double> kBesselK0_2{0.1138938727495334356527, 0.0};  // K_0(2)
inline const std::complex<double> kBesselK_ir{1.278013826073987930299e-7, 0.0};  // K_{9.5337i}(1), real
inline const std::complex<double> kBesselK_ir_x5{0.002063961708392980057095, 0.0};
inline const std::complex<double> kGauss7{2.370469405576200591575, -1.175106291884787002618};  // tau(chi), chi mod 7 of order 3 with chi(3)=e^{2pi i/3}
inline const std::complex<double> kKernel_1_1{-1.019684476440520450554, 0.0};  // K(t=1, y=1)
inline const std::complex<double> kKernel_2p3_0p7{-0.5225728950294745408102, 0.0};
inline const std::complex<double> kKernel_1_10{-0.2177290681031224884602, 0.0};
inline const std::complex<double> kKernel_1_1e6_abs{0.00177248145865111147098, 0.0};  // |K(1,1e6)|
inline const std::complex<double> kKernel_tiny_t{5.536368203855064178242, 0.0};  // K(1e-4, 0.8): removable-singularity region
inline const std::complex<double> kKernel_t0{5.536368526959562994564, 0.0};  // K(t->0, 0.8) limit
inline const std::complex<double> kVtilde_1{-0.2444639212757716300192, 0.0};  // int K(1,y) bump_{1.5,0.5}(y) dy
inline const std::complex<double> kHflat_triv_1{0.06084601256590555062083, 0.0};  // int f1(z) f2(z) d*z
inline const std::complex<double> kWeta_2i{0.04657773276774166134464, -0.02699427675033058145908};  // w(|.|^{2i}, triv) for the same bump pair
inline const std::complex<double> kResKernel_1_half{-8.157475811524163604434, 0.0};  // closed form at r=1, t=1/2
inline const std::complex<double> kResKernelContour_1_half{-8.157475811524163604434, 0.0};  // same value via the s-contour
inline const std::complex<double> kGquot_r0_tau_quarter{10.10154871858968438043, 0.0};  // prod_pm Gamma((1/2-1/4)/2)/Gamma((1/2+1/4)/2)
inline const std::complex<double> kWhittaker_r0_y1{0.001833168721808740623788, 0.0};  // 2 K_0(2 pi)
inline const double kDivisorSum1e6 = 13970034.0;  // sum_{n<=1e6} tau(n)
inline const double kTau12 = 6.0;
inline const std::complex<double> kAppendixLhs_r1{-1.712857486225150592258, 0.0};  // Vcheck(1) for bump(0.5,0.3)
inline const std::complex<double> kAppendixRhs_r1{-1.712857235074790981994, 9.417462573276794456956e-29};  // pi*h_sharp via contour; agreement check
inline const double kAppendixResidual_r1 = 1.466265358501931641798e-7;  // relative residual (design check)

}  // namespace spgl2::ref
