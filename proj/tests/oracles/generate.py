#!/usr/bin/env python3
# Copyright 2026 The qnmlab Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates tests/unit/oracle_values.hpp from mpmath / numpy reference computations.

Run from the repository root:  python3 tests/oracles/generate.py > tests/unit/oracle_values.hpp
"""

import mpmath as mp
import numpy as np

mp.mp.dps = 40


def c(z):
    z = complex(z)
    return "{%.17g, %.17g}" % (z.real, z.imag)


out = []
emit = out.append

emit("// Copyright 2026 The qnmlab Authors")
emit("// SPDX-License-Identifier: Apache-2.0")
emit("//")
emit("// Generated by tests/oracles/generate.py (mpmath at 40 digits). Do not edit.")
emit("")
emit("#pragma once")
emit("")
emit("#include <array>")
emit("#include <complex>")
emit("")
emit("namespace qnmlab::oracle")
emit("{")
emit("")
emit("using cd = std::complex<double>;")
emit("")

# Cylinder functions over |z| in [0.05, 50], |Im z| <= 5, both half planes, plus the
# region around the series/asymptotic switch.
args = [
    0.05, 0.5, 1.0, 2.5, 7.3, 11.9, 12.1, 19.0, 35.0, 50.0,
    1 + 1j, 3 - 2j, 0.3 + 0.01j, 6 + 4.5j, 6 - 4.5j, 11.5 + 3j, 12.5 + 3j, 11.5 - 3j,
    12.5 - 3j, 20 + 5j, 20 - 5j, 45 - 0.2j, 2.6 - 0.004j, 4.2 - 0.07j, 12.0 + 0.5j,
    -3 + 1j, -0.7 - 0.2j, 1j, 8j, -5j, 30 + 0.3j, -20 - 3j, -15 + 2j, -8 + 4j, 5 + 4.9j,
    -40 - 4.9j, 2.1 + 1.5j,
]
emit("struct CylinderSample")
emit("{")
emit("  cd z, j0, y0, j1, y1, h0, h1;")
emit("};")
emit("")
emit("inline constexpr std::array<CylinderSample, %d> cylinder_samples{{" % len(args))
for z in args:
    zz = mp.mpc(z)
    j0, y0 = mp.besselj(0, zz), mp.bessely(0, zz)
    j1, y1 = mp.besselj(1, zz), mp.bessely(1, zz)
    h0, h1 = mp.hankel1(0, zz), mp.hankel1(1, zz)
    emit("    {%s, %s, %s, %s, %s, %s, %s}," % tuple(c(v) for v in (zz, j0, y0, j1, y1, h0, h1)))
emit("}};")
emit("")

# Gauss-Legendre rules.
for n in (5, 12):
    x, w = np.polynomial.legendre.leggauss(n)
    emit("inline constexpr std::array<double, %d> gauss_nodes_%d{%s};" %
         (n, n, ", ".join("%.17g" % v for v in x)))
    emit("inline constexpr std::array<double, %d> gauss_weights_%d{%s};" %
         (n, n, ", ".join("%.17g" % v for v in w)))
emit("")


# Disk integrals of (i/4) H0(k |r - r'|) over a disk of radius a, evaluated at distance rho
# from its centre, by direct 2D quadrature in polar coordinates about the evaluation point.
def disk_integral(k, a, rho):
    k = mp.mpc(k)

    def g(s):
        return 0.25j * mp.hankel1(0, k * s)

    # For each direction phi from the evaluation point, the ray stays in the disk for
    # s in [s_lo, s_hi] where |p + s e| = a.
    def ray(phi):
        b = rho * mp.cos(phi)
        disc = a * a - rho * rho * mp.sin(phi) ** 2
        if disc < 0:
            return mp.mpf(0)
        r = mp.sqrt(disc)
        s_hi = -b + r
        s_lo = max(mp.mpf(0), -b - r)
        if s_hi <= s_lo:
            return mp.mpf(0)
        return mp.quad(lambda s: g(s) * s, [s_lo, s_hi])

    if rho < a:
        return 2 * mp.quad(ray, [0, mp.pi])
    edge = mp.asin(a / rho)
    return 2 * mp.quad(ray, [mp.pi - edge, mp.pi])


mp.mp.dps = 20
disk_cases = [(2.7, 0.02, 0.0), (2.7, 0.02, 0.011), (2.7, 0.02, 0.05), (1.3 - 0.05j, 0.4, 0.1),
              (1.3 - 0.05j, 0.4, 0.9), (9.0, 0.15, 0.0)]
emit("struct DiskSample")
emit("{")
emit("  cd k;")
emit("  double radius, rho;")
emit("  cd integral;")
emit("};")
emit("")
emit("inline constexpr std::array<DiskSample, %d> disk_samples{{" % len(disk_cases))
for k, a, rho in disk_cases:
    val = disk_integral(k, mp.mpf(a), mp.mpf(rho))
    emit("    {%s, %.17g, %.17g, %s}," % (c(k), a, rho, c(val)))
emit("}};")
emit("")
mp.mp.dps = 40

# Slab of index n on [0, 1] in vacuum, lowest mode: omega = (pi - i ln((n+1)/(n-1)))/n.
# f = cos(n w x) + (i/n) sin(n w x) inside (outgoing continuation outside); normalization
# integral with the surface terms placed at x = -d and x = 1 + d must not depend on d.
def slab_norm(n, m, d):
    n = mp.mpf(n)
    w = (m * mp.pi - 1j * mp.log((n + 1) / (n - 1))) / n
    k = n * w

    def f_in(x):
        return mp.cos(k * x) - 1j / n * mp.sin(k * x)

    # Left: f = exp(-i w x); right: f = f(1) exp(i w (x - 1)).
    f1 = f_in(1)
    inner = n * n * mp.quad(lambda x: f_in(x) ** 2, [0, 1])
    left = mp.quad(lambda x: mp.exp(-2j * w * x), [-d, 0])
    right = mp.quad(lambda x: (f1 * mp.exp(1j * w * (x - 1))) ** 2, [1, 1 + d])
    surface = 1j / (2 * w) * (mp.exp(2j * w * d) + (f1 * mp.exp(1j * w * d)) ** 2)
    return w, inner + left + right + surface, f1


emit("// Lowest slab mode: f = exp(-i w x) on the left. Norm with boundaries at -d and 1 + d.")
emit("struct SlabNormSample")
emit("{")
emit("  double index, d;")
emit("  cd omega, norm, f_right;")
emit("};")
emit("")
cases = [(2.0, 0.0), (2.0, 0.7), (3.4, 0.0), (3.4, 2.3)]
emit("inline constexpr std::array<SlabNormSample, %d> slab_norm_samples{{" % len(cases))
for n, d in cases:
    w, nv, f1 = slab_norm(n, 1, mp.mpf(d))
    emit("    {%.17g, %.17g, %s, %s, %s}," % (n, d, c(w), c(nv), c(f1)))
emit("}};")
emit("")
emit("}  // namespace qnmlab::oracle")
print("\n".join(out))
