#!/usr/bin/env python3
"""Independent derivations of the frozen constants used by the C++ unit tests.

Everything here is written directly from the model equations with mpmath /
numpy / shapely and shares no code with the library.  Run it to regenerate
the numbers quoted in tests/*.cpp.
"""
import itertools
import math

import mpmath as mp
import numpy as np
from shapely.geometry import Point

mp.mp.dps = 40


def rotate(p, deg):
    t = mp.radians(deg)
    m = mp.matrix([[mp.cos(t), -mp.sin(t)], [mp.sin(t), mp.cos(t)]])
    return m * mp.matrix(p)


def lens_by_polygon(a, b, c, res=20000):
    wake = Point(0.0, 0.0).buffer(a, quad_segs=res)
    rotor = Point(c, 0.0).buffer(b, quad_segs=res)
    return wake.intersection(rotor).area


def lens_by_quadrature(a, b, c):
    # integrate the chord length of the rotor disc that lies inside the wake disc
    def chord(x):
        hr = mp.sqrt(max(b * b - (x - c) ** 2, 0))
        hw = mp.sqrt(max(a * a - x * x, 0))
        return 2 * min(hr, hw)
    lo, hi = max(-a, c - b), min(a, c + b)
    xs = sorted({lo, hi, (a * a - b * b + c * c) / (2 * c)})
    return mp.quad(chord, xs)


def poly(v):
    return -0.9114 * v**4 + 21.6654 * v**3 - 113.1189 * v**2 + 201.1211 * v - 55.0267


def pg(v):
    if v < 3:
        return 0.0
    if v < 14:
        return min(max(poly(v), 0.0), 5000.0)
    if v < 25:
        return 5000.0
    return 0.0


R, H, CT, Z0 = 63.0, 90.0, 0.88, 0.0005
K = 0.5 / math.log(H / Z0)


def speeds(pos, theta, v):
    t = math.radians(theta)
    rot = [(math.cos(t) * x - math.sin(t) * y, math.sin(t) * x + math.cos(t) * y) for x, y in pos]
    out = []
    for i, (xi, yi) in enumerate(rot):
        acc = 0.0
        for j, (xj, yj) in enumerate(rot):
            d = yj - yi
            if i == j or d <= 0:
                continue
            rj = R + K * d
            a = float(lens_by_quadrature(mp.mpf(rj), mp.mpf(R), mp.mpf(abs(xj - xi)))) if abs(xj - xi) > 0 else None
            c = abs(xj - xi)
            if c >= rj + R:
                a = 0.0
            elif c <= abs(rj - R):
                a = math.pi * min(rj, R) ** 2
            if a <= 0:
                continue
            dv = (1 - math.sqrt(1 - CT)) / (1 + K * d / R) ** 2 * a / (math.pi * R * R)
            acc += dv * dv
        out.append(v * (1 - min(math.sqrt(acc), 1.0)))
    return out


if __name__ == "__main__":
    p = rotate([3, 4], 30)
    print("rotate((3,4),30) =", mp.nstr(p[0], 20), mp.nstr(p[1], 20))
    print("lens(100,50,120) quad =", mp.nstr(lens_by_quadrature(mp.mpf(100), mp.mpf(50), mp.mpf(120)), 20))
    print("lens(100,50,120) poly =", lens_by_polygon(100, 50, 120))
    print("k(60,0.3) =", mp.nstr(mp.mpf(0.5) / mp.log(mp.mpf(60) / mp.mpf("0.3")), 20))
    print("k(90,0.0005) =", mp.nstr(mp.mpf(0.5) / mp.log(mp.mpf(90) / mp.mpf("0.0005")), 20))
    k_off = mp.mpf(0.5) / mp.log(mp.mpf(90) / mp.mpf("0.0005"))
    print("wake_radius(63,k_off,1000) =", mp.nstr(63 + k_off * 1000, 20))
    k_on = mp.mpf(0.5) / mp.log(mp.mpf(60) / mp.mpf("0.3"))
    print("deficit(0.88,k_on,250,20) =", mp.nstr((1 - mp.sqrt(mp.mpf("0.12"))) / (1 + k_on * 250 / 20) ** 2, 20))
    print("poly(14) =", poly(14.0), " poly(10) =", poly(10.0), " poly(12) =", poly(12.0))
    print("cost(1) =", mp.nstr(mp.mpf(1) * (mp.mpf(2) / 3 + mp.exp(mp.mpf("-0.00174")) / 3), 20))
    n = 50
    c50 = n * (2 / 3 + math.exp(-0.00174 * n * n) / 3)
    print("cost(50) rel dev from 2N/3 =", c50 / (2 * n / 3) - 1)
    print("C(441,16) =", mp.nstr(mp.binomial(441, 16), 6), " 2^441 =", mp.nstr(mp.mpf(2) ** 441, 6))
    chain = [(0.0, 0.0), (0.0, 500.0), (0.0, 1000.0)]
    print("chain speeds @12 (wind 0deg) =", [repr(s) for s in speeds(chain, 0.0, 12.0)])
    offset = [(0.0, 0.0), (90.0, 600.0), (0.0, 1400.0)]
    print("offset chain speeds @12 =", [repr(s) for s in speeds(offset, 0.0, 12.0)])
    # Weibull discretised mean vs analytic mean
    shape, scale = 2.1, 10.0
    F = lambda v: 1 - math.exp(-((v / scale) ** shape))
    edges = np.arange(0, 31)
    w = np.array([F(b) - F(a) for a, b in zip(edges[:-1], edges[1:])])
    w /= w.sum()
    mids = (edges[:-1] + edges[1:]) / 2
    print("weibull disc mean =", float((w * mids).sum()), " analytic =", scale * math.gamma(1 + 1 / shape))
