#!/usr/bin/env python3
"""Pin down the closed-form kernel constants for the two fast-path support
cases by comparing independent evaluation routes in mpmath."""

import mpmath as mp

mp.mp.dps = 25


def bump(x, center, hw):
    u = (x - center) / hw
    if abs(u) >= 1:
        return mp.mpf(0)
    return mp.e ** (-1 / (1 - u * u))


def gR(s):
    return mp.power(mp.pi, -s / 2) * mp.gamma(s / 2)


def gamma_half(s, delta, r):
    res = 1
    for eps in (1, -1):
        u = s + eps * 1j * r
        res *= (-1j) ** delta * gR(1 - mp.mpf(1) / 2 - u + delta) / gR(mp.mpf(1) / 2 + u + delta)
    return res


def gamma_one(s, delta):
    res = 1
    for _ in (1, -1):
        res *= (-1j) ** delta * gR(s + delta) / gR(1 - s + delta)
    return res


def hsharp_contour(r, phi, tsupport, sigma=mp.mpf("0.25")):
    # h_sharp from the gamma-gamma contour (Theorem 2(1) shape), with
    # t-support given for the variable t = 1-y.
    def t_integral(s, delta):
        def g(t):
            val = phi(1 - t) * mp.power(abs(t), s) / abs(t)
            if delta == 1:
                val *= mp.sign(t)
            return val
        return mp.quad(g, tsupport, maxdegree=7)

    total = mp.mpf(0)
    for delta in (0, 1):
        def f(v):
            s = sigma + 1j * v
            return t_integral(s, delta) * gamma_half(s, delta, r) * gamma_one(s, delta) / (2 * mp.pi)
        total += mp.quad(f, [-120, -40, -10, 0, 10, 40, 120], maxdegree=6) / 2
    return total


def K_res(r, t):
    s = mp.mpf(0)
    for eps in (1, -1):
        ir = eps * 1j * r
        term = 2 * mp.power(t, -mp.mpf(1) / 2 + ir) * (1 + eps * 1j / mp.sinh(mp.pi * r))
        term *= mp.gamma(mp.mpf(1) / 2 + ir) ** 2 / mp.gamma(1 + 2 * ir)
        term *= mp.hyp2f1(mp.mpf(1) / 2 + ir, mp.mpf(1) / 2 + ir, 1 + 2 * ir, t)
        s += term
    return s


def K_res_neg(r, t):
    s = mp.mpf(0)
    for eps in (1, -1):
        ir = eps * 1j * r
        term = 2 * mp.power(t, -mp.mpf(1) / 2 + ir) * (1 + eps * 1j / mp.sinh(mp.pi * r))
        term *= mp.gamma(mp.mpf(1) / 2 + ir) ** 2 / mp.gamma(1 + 2 * ir)
        term *= mp.hyp2f1(mp.mpf(1) / 2 + ir, mp.mpf(1) / 2 + ir, 1 + 2 * ir, -t)
        s += term
    return s


# ---- Case 1: supp phi in (0,1) ----
r = 1
phi1 = lambda t: bump(t, mp.mpf("0.5"), mp.mpf("0.3"))
h_contour = hsharp_contour(r, phi1, [mp.mpf("0.2"), mp.mpf("0.5"), mp.mpf("0.8")])
h_res = mp.quad(lambda u: phi1(u) * K_res(r, 1 - u), [mp.mpf("0.2"), mp.mpf("0.5"), mp.mpf("0.8")]) / 2
print("case1 contour   :", mp.nstr(h_contour, 12))
print("case1 (1/2)iKres:", mp.nstr(h_res, 12))
print("case1 ratio     :", mp.nstr(h_contour / h_res, 12))

# ---- Case 2: supp phi in (1, inf) ----
phi2 = lambda t: bump(t, mp.mpf(2), mp.mpf("0.5"))
h_contour2 = hsharp_contour(r, phi2, [mp.mpf("-1.5"), mp.mpf("-1.0"), mp.mpf("-0.5")])
h_res2 = mp.quad(lambda u: phi2(1 + u) * K_res_neg(r, u), [mp.mpf("0.5"), mp.mpf("1.0"), mp.mpf("1.5")]) / 2
print("case2 contour      :", mp.nstr(h_contour2, 12))
print("case2 (1/2)iKresNeg:", mp.nstr(h_res2, 12))
print("case2 ratio        :", mp.nstr(h_contour2 / h_res2, 12))

# ---- wcheck vs pi*h_sharp for case 2 ----
def vcheck(r, phi, support):
    def f(t):
        at = abs(t)
        s = mp.mpf(0)
        for eps in (1, -1):
            ir = eps * 1j * r
            term = mp.power(abs(1 / at - 1), ir) * mp.gamma(mp.mpf(1) / 2 + ir) ** 2 / mp.gamma(1 + 2 * ir)
            term *= mp.hyp2f1(mp.mpf(1) / 2 + ir, mp.mpf(1) / 2 + ir, 1 + 2 * ir, 1 - 1 / at)
            term *= 1 + eps * 1j / mp.sinh(mp.pi * r)
            s += term
        return phi(t) * s / mp.sqrt(abs(t * (at - 1)))
    return mp.pi * mp.quad(f, support)


v2 = vcheck(r, phi2, [mp.mpf("1.5"), mp.mpf("2"), mp.mpf("2.5")])
print("case2 vcheck       :", mp.nstr(v2, 12))
print("case2 vcheck/pi*hc :", mp.nstr(v2 / (mp.pi * h_contour2), 12))

# ---- case 3: supp phi in (-inf, 0): wcheck vs gamma-gamma contour ----
phi3 = lambda t: bump(-t, mp.mpf("1.7"), mp.mpf("0.4"))   # supp [-2.1, -1.3]
v3 = vcheck(r, phi3, [mp.mpf("-2.1"), mp.mpf("-1.7"), mp.mpf("-1.3")])
h_contour3 = hsharp_contour(r, phi3, [mp.mpf("2.3"), mp.mpf("2.7"), mp.mpf("3.1")])
print("case3 vcheck       :", mp.nstr(v3, 12))
print("case3 pi*contour   :", mp.nstr(mp.pi * h_contour3, 12))
print("case3 ratio        :", mp.nstr(v3 / (mp.pi * h_contour3), 12))
