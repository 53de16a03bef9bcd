#pragma once

#include <complex>

#include "spgl2/core.hpp"

namespace spgl2 {

/// Neumaier compensated accumulator. Fixed-order adds give
/// reproducible sums independent of thread count.
class CompensatedSum {
 public:
  void add(double x) {
    double t = s_ + x;
    if (std::abs(s_) >= std::abs(x)) {
      c_ += (s_ - t) + x;
    } else {
      c_ += (x - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

/// Unevaluated double-double value (~32 significant digits) for the
/// extended accumulation mode. Only the operations the quadrature
/// reductions need.
struct DD {
  double hi = 0.0;
  double lo = 0.0;

  static DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  static DD two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
  }

  DD& operator+=(double x) {
    DD s = two_sum(hi, x);
    s.lo += lo;
    DD r = two_sum(s.hi, s.lo);
    hi = r.hi;
    lo = r.lo;
    return *this;
  }

  DD& operator+=(const DD& x) {
    DD s = two_sum(hi, x.hi);
    s.lo += lo + x.lo;
    DD r = two_sum(s.hi, s.lo);
    hi = r.hi;
    lo = r.lo;
    return *this;
  }

  double value() const { return hi + lo; }
};

inline DD dd_mul(double a, double b) { return DD::two_prod(a, b); }

/// Accumulator switchable between compensated-double and double-double.
/// The switch is a process-wide mode set once by the CLI.
class Accumulator {
 public:
  static bool& extended_mode() {
    static bool mode = false;
    return mode;
  }

  void add(double w, Complex f) {
    if (extended_mode()) {
      ddre_ += dd_mul(w, f.real());
      ddim_ += dd_mul(w, f.imag());
    } else {
      cre_.add(w * f.real());
      cim_.add(w * f.imag());
    }
  }

  void add(Complex z) {
    if (extended_mode()) {
      ddre_ += z.real();
      ddim_ += z.imag();
    } else {
      cre_.add(z.real());
      cim_.add(z.imag());
    }
  }

  Complex value() const {
    if (extended_mode()) return {ddre_.value(), ddim_.value()};
    return {cre_.value(), cim_.value()};
  }

 private:
  CompensatedSum cre_, cim_;
  DD ddre_, ddim_;
};

}  // namespace spgl2
