#!/usr/bin/env python3
"""Pointwise checks of the gamma-quotient trig rewrites and the
closed-form kernel constants, plus the case-2 kernel contour value."""

import mpmath as mp

mp.mp.dps = 50


def gR(s):
    return mp.power(mp.pi, -s / 2) * mp.gamma(s / 2)


def Q(delta, s, r):
    # gamma(1/2, pi_{r,even} x chi_{s,delta}) * gamma(1, pi_{0,even} x chi^{-1})
    res = 1
    for eps in (1, -1):
        u = s + eps * 1j * r
        res *= (-1j) ** delta * gR(1 - mp.mpf(1) / 2 - u + delta) / gR(mp.mpf(1) / 2 + u + delta)
    for _ in (1, -1):
        res *= (-1j) ** delta * gR(s + delta) / gR(1 - s + delta)
    return res


r = mp.mpf(1)
print("== case 1 identity: (Q0+Q1)(1-s) vs (2/pi)(2cosh(pi r)-sin(2 pi s))Gamma(1-s)^2 prod Gamma(-1/2 pm ir+s) ==")
for v in (mp.mpf("0.3"), mp.mpf(2), mp.mpf(5)):
    s = mp.mpf(3) / 4 + 1j * v
    lhs = Q(0, 1 - s, r) + Q(1, 1 - s, r)
    rhs = (2 / mp.pi) * (2 * mp.cosh(mp.pi * r) - mp.sin(2 * mp.pi * s))
    rhs *= mp.gamma(1 - s) ** 2 * mp.gamma(s - mp.mpf(1) / 2 + 1j * r) * mp.gamma(s - mp.mpf(1) / 2 - 1j * r)
    print(f"  v={float(v):5.2f}  ratio lhs/rhs = {mp.nstr(lhs / rhs, 16)}")

print("== case 2 identity: (Q0-Q1)(1-s) vs 2 Gamma(1-s)^2 (-cosh(pi r)cos(pi s)+sin(pi s)) prod Gamma(-1/2 pm ir +s) ==")
for v in (mp.mpf("0.3"), mp.mpf(2), mp.mpf(5)):
    s = mp.mpf(3) / 4 + 1j * v
    lhs = Q(0, 1 - s, r) - Q(1, 1 - s, r)
    rhs = 2 * mp.gamma(1 - s) ** 2 * (-mp.cosh(mp.pi * r) * mp.cos(mp.pi * s) + mp.sin(mp.pi * s))
    rhs *= mp.gamma(s - mp.mpf(1) / 2 + 1j * r) * mp.gamma(s - mp.mpf(1) / 2 - 1j * r)
    print(f"  v={float(v):5.2f}  ratio lhs/rhs = {mp.nstr(lhs / rhs, 16)}")

mp.mp.dps = 25

def K_res_neg(r, t):
    s = mp.mpf(0)
    for eps in (1, -1):
        ir = eps * 1j * r
        term = 2 * mp.power(t, -mp.mpf(1) / 2 + ir) * (1 + eps * 1j / mp.sinh(mp.pi * r))
        term *= mp.gamma(mp.mpf(1) / 2 + ir) ** 2 / mp.gamma(1 + 2 * ir)
        term *= mp.hyp2f1(mp.mpf(1) / 2 + ir, mp.mpf(1) / 2 + ir, 1 + 2 * ir, -t)
        s += term
    return s


def K2_contour(r, u):
    # int_{(3/4)} u^{-s} G2(s) ds/(2 pi i), rapidly decaying integrand
    def f(v):
        s = mp.mpf(3) / 4 + 1j * v
        G2 = 2 * mp.gamma(1 - s) ** 2 * (-mp.cosh(mp.pi * r) * mp.cos(mp.pi * s) + mp.sin(mp.pi * s))
        G2 *= mp.gamma(s - mp.mpf(1) / 2 + 1j * r) * mp.gamma(s - mp.mpf(1) / 2 - 1j * r)
        return mp.power(u, -s) * G2 / (2 * mp.pi)
    return mp.quad(f, [-30, -5, 0, 5, 30])


u0 = mp.mpf("0.6")
k2 = K2_contour(r, u0)
kn = K_res_neg(r, u0)
print("case2 kernel contour:", mp.nstr(k2, 16))
print("K_res_neg           :", mp.nstr(kn, 16))
print("ratio               :", mp.nstr(k2 / kn, 16))
