#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "spgl2/core.hpp"
#include "spgl2/quadrature.hpp"

namespace spgl2 {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool empty() const { return hi <= lo; }
  double length() const { return std::max(0.0, hi - lo); }
};

using IntervalList = std::vector<Interval>;

inline IntervalList merge_intervals(IntervalList v) {
  std::sort(v.begin(), v.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalList out;
  for (const auto& iv : v) {
    if (iv.empty()) continue;
    if (!out.empty() && iv.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, iv.hi);
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

inline IntervalList intersect_intervals(const IntervalList& a,
                                        const IntervalList& b) {
  IntervalList out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Interval iv{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
      if (!iv.empty()) out.push_back(iv);
    }
  }
  return merge_intervals(out);
}

/// Map each interval by x -> s*x (s != 0), keeping lo < hi.
inline IntervalList scale_intervals(const IntervalList& v, double s) {
  IntervalList out;
  for (const auto& iv : v) {
    Interval w{iv.lo * s, iv.hi * s};
    if (s < 0) std::swap(w.lo, w.hi);
    out.push_back(w);
  }
  return merge_intervals(out);
}

inline IntervalList shift_intervals(const IntervalList& v, double d) {
  IntervalList out = v;
  for (auto& iv : out) {
    iv.lo += d;
    iv.hi += d;
  }
  return out;
}

struct BumpAtom {
  double center = 1.0;      // > 0; actual location is +-center by side
  double halfwidth = 0.5;   // > 0, < center (support stays off 0)
  bool negative_axis = false;
  double amplitude = 1.0;
};

/// Smooth compactly supported function on R^x: a sum of bump atoms
/// amplitude * exp(-1/(1-u^2)), u = (x -+ center)/halfwidth, optionally
/// carrying a global |x|^power factor (used by the short-interval
/// windows, which come weighted by sqrt|n1 n2|).
class TestFunction {
 public:
  TestFunction() = default;
  explicit TestFunction(std::vector<BumpAtom> atoms, double power = 0.0)
      : atoms_(std::move(atoms)), power_(power) {
    for (const auto& a : atoms_) {
      if (a.halfwidth <= 0.0 || a.center <= a.halfwidth) {
        throw std::invalid_argument(
            "TestFunction: atom support must avoid 0 (need center > halfwidth "
            "> 0)");
      }
    }
  }

  static TestFunction bump(double center, double halfwidth,
                           double amplitude = 1.0,
                           bool negative_axis = false) {
    return TestFunction({BumpAtom{center, halfwidth, negative_axis, amplitude}});
  }

  /// x |-> f(-x).
  TestFunction reflected() const {
    std::vector<BumpAtom> v = atoms_;
    for (auto& a : v) a.negative_axis = !a.negative_axis;
    return TestFunction(std::move(v), power_);
  }

  bool zero() const { return atoms_.empty(); }
  double power() const { return power_; }
  const std::vector<BumpAtom>& atoms() const { return atoms_; }

  double operator()(double x) const {
    double s = 0.0;
    for (const auto& a : atoms_) {
      const double loc = a.negative_axis ? -a.center : a.center;
      const double u = (x - loc) / a.halfwidth;
      if (std::abs(u) < 1.0) {
        s += a.amplitude * std::exp(-1.0 / (1.0 - u * u));
      }
    }
    if (s != 0.0 && power_ != 0.0) s *= std::pow(std::abs(x), power_);
    return s;
  }

  double derivative(double x) const {
    double s = 0.0, sname = 0.0;
    for (const auto& a : atoms_) {
      const double loc = a.negative_axis ? -a.center : a.center;
      const double u = (x - loc) / a.halfwidth;
      if (std::abs(u) < 1.0) {
        const double w = 1.0 - u * u;
        const double core = a.amplitude * std::exp(-1.0 / w);
        sname += core;
        s += core * (-2.0 * u / (w * w)) / a.halfwidth;
      }
    }
    if (power_ == 0.0) return s;
    const double ax = std::abs(x);
    return std::pow(ax, power_) * s +
           power_ * std::pow(ax, power_ - 1.0) * sgn(x) * sname;
  }

  IntervalList support() const {
    IntervalList v;
    for (const auto& a : atoms_) {
      const double loc = a.negative_axis ? -a.center : a.center;
      v.push_back({loc - a.halfwidth, loc + a.halfwidth});
    }
    return merge_intervals(v);
  }

  /// int f(x) sgn(x)^delta |x|^tau d^x; entire in tau (compact support
  /// off 0) and rapidly decaying on vertical lines.
  Complex mellin(Complex tau, int delta,
                 const QuadratureSpec& spec = {}) const {
    IntegrationResult total;
    for (const auto& iv : support()) {
      auto g = [&](double x) -> Complex {
        const double fx = (*this)(x);
        if (fx == 0.0) return {0.0, 0.0};
        return fx * sgn_pow(x, delta) *
               std::pow(Complex(std::abs(x), 0.0), tau) / std::abs(x);
      };
      total += integrate_gl(g, iv.lo, iv.hi, spec);
    }
    return total.value;
  }

 private:
  static double sgn(double x) { return x < 0 ? -1.0 : 1.0; }
  std::vector<BumpAtom> atoms_;
  double power_ = 0.0;
};

/// h(y1, y2) = factor1(y1) * conj(factor2)(y2); factors are real-valued,
/// so the conjugation is a no-op kept for the record.
struct BivariateWeight {
  TestFunction factor1;
  TestFunction factor2;

  double operator()(double y1, double y2) const {
    return factor1(y1) * factor2(y2);
  }
  bool zero() const { return factor1.zero() || factor2.zero(); }
};

}  // namespace spgl2
