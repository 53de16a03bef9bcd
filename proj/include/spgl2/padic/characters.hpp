#pragma once

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spgl2/core.hpp"
#include "spgl2/specfun.hpp"

namespace spgl2::padic {

/// Character of Q_p^x: an unramified part fixed by its value at p
/// (= p^{-exponent}) times a finite-order character of the units.
struct PadicCharacter {
  long p = 2;
  Complex value_at_p{1.0, 0.0};
  UnitCharacter unit;  // conductor exponent m; m = 0 means unramified

  static PadicCharacter trivial(long p) {
    return {p, Complex{1.0, 0.0}, UnitCharacter::trivial(p)};
  }
  static PadicCharacter unramified(long p, Complex value_at_p) {
    return {p, value_at_p, UnitCharacter::trivial(p)};
  }

  int conductor_exponent() const { return unit.conductor_exponent(); }
  /// Re(chi) = Re(exponent), exponent defined by value_at_p = p^{-e}.
  double real_part() const {
    return -std::log(std::abs(value_at_p)) / std::log(static_cast<double>(p));
  }
  PadicCharacter inverse() const {
    return {p, 1.0 / value_at_p, unit.inverse()};
  }
  PadicCharacter conj() const {
    return {p, std::conj(value_at_p), unit.inverse()};
  }

  /// chi(y) for y = p^v u given by valuation and unit residue.
  Complex operator()(long v, long unit_residue) const {
    return std::pow(value_at_p, static_cast<double>(v)) * unit(unit_residue);
  }
};

/// Unramified principal series of PGL2(Q_p), described by its Satake
/// parameter alpha: L(s, pi) = (1 - alpha X)^{-1} (1 - alpha^{-1} X)^{-1}.
struct PadicRep {
  long p = 2;
  Complex satake{1.0, 0.0};

  PadicRep(long prime, Complex alpha) : p(prime), satake(alpha) {
    if (std::abs(alpha) == 0.0) {
      throw std::invalid_argument("PadicRep: satake parameter must be nonzero");
    }
    if (theta() >= 0.5) {
      throw std::invalid_argument("PadicRep: need p^{-1/2} < |alpha| < p^{1/2}");
    }
  }

  double theta() const {
    return std::abs(std::log(std::abs(satake)) /
                    std::log(static_cast<double>(p)));
  }
};

/// All characters of (Z/p^M Z)^x, each attached to its exact conductor.
/// p odd uses a primitive root; p = 2 uses the {-1, 5} generators.
inline std::vector<UnitCharacter> unit_characters_mod(long p, int M) {
  std::vector<UnitCharacter> out;
  long q = 1;
  for (int i = 0; i < M; ++i) q *= p;
  if (M == 0 || q <= 2) {
    out.push_back(UnitCharacter::trivial(p));
    return out;
  }
  // generators and their orders
  std::vector<std::pair<long, long>> gens;
  if (p != 2) {
    const long phi = q / p * (p - 1);
    long g = 2;
    auto order_of = [&](long a) {
      long x = a % q, ord = 1;
      while (x != 1) {
        x = (x * a) % q;
        ++ord;
      }
      return ord;
    };
    while (std::gcd(g, q) != 1 || order_of(g) != phi) ++g;
    gens = {{g, phi}};
  } else if (M == 2) {
    gens = {{3, 2}};
  } else {
    gens = {{q - 1, 2}, {5, q / 4}};
  }
  // enumerate character exponents on each generator
  std::vector<long> idx(gens.size(), 0);
  while (true) {
    // build the value table mod q
    std::vector<Complex> vals(q, Complex{0.0, 0.0});
    // walk the group as products of generator powers
    std::vector<long> gpow(gens.size(), 1);
    std::function<void(size_t, long, Complex)> walk = [&](size_t gi, long a,
                                                          Complex v) {
      if (gi == gens.size()) {
        vals[a] = v;
        return;
      }
      long x = a;
      Complex w = v;
      for (long k = 0; k < gens[gi].second; ++k) {
        walk(gi + 1, x, w);
        x = (x * gens[gi].first) % q;
        w *= std::polar(1.0, kTwoPi * static_cast<double>(idx[gi]) /
                                 static_cast<double>(gens[gi].second));
      }
    };
    walk(0, 1, Complex{1.0, 0.0});
    UnitCharacter chi(p, M, std::move(vals));
    // find the exact conductor: smallest j with chi trivial on 1 + p^j
    int cond = M;
    for (int j = 0; j <= M; ++j) {
      long pj = 1;
      for (int i = 0; i < j; ++i) pj *= p;
      bool trivial_on = true;
      for (long t = pj; t < q && trivial_on; t += pj) {
        const long a = 1 + t;
        if (std::gcd(a, p) != 1) continue;
        if (std::abs(chi(a) - Complex{1.0, 0.0}) > 1e-9) trivial_on = false;
      }
      if (j == 0) {
        // j = 0 means trivial on all units
        bool all_trivial = true;
        for (long a = 1; a < q; ++a) {
          if (std::gcd(a, p) != 1) continue;
          if (std::abs(chi(a) - Complex{1.0, 0.0}) > 1e-9) {
            all_trivial = false;
            break;
          }
        }
        if (all_trivial) {
          cond = 0;
          break;
        }
        continue;
      }
      if (trivial_on) {
        cond = j;
        break;
      }
    }
    if (cond == 0) {
      out.push_back(UnitCharacter::trivial(p));
    } else {
      long pc = 1;
      for (int i = 0; i < cond; ++i) pc *= p;
      std::vector<Complex> cv(pc, Complex{0.0, 0.0});
      for (long a = 0; a < pc; ++a) {
        if (std::gcd(a, p) != 1 && a % p == 0) continue;
        if (std::gcd(a, pc) != 1) continue;
        // lift a to a unit mod q
        long lift = a;
        while (std::gcd(lift, q) != 1) lift += pc;
        cv[a] = chi(lift);
      }
      out.push_back(UnitCharacter(p, cond, std::move(cv)));
    }
    // advance the multi-index
    size_t gi = 0;
    while (gi < gens.size()) {
      if (++idx[gi] < gens[gi].second) break;
      idx[gi] = 0;
      ++gi;
    }
    if (gi == gens.size()) break;
  }
  return out;
}

}  // namespace spgl2::padic
