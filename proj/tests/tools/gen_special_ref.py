#!/usr/bin/env python3
"""Regenerate tests/unit/special_ref.inc from mpmath (50 digits)."""
import mpmath as mp

mp.mp.dps = 50

kummer = [
    (0.5, 1.5, 2.0), (-2.5, 3.2, 7.5), (3.0, 0.7, 12.0), (-4.0, 2.0, 5.0),
    (1.3, 4.6, 25.0), (2.2, 1.1, 40.0), (-0.7, 0.3, 0.2), (4.5, 4.9, 60.0),
    (-3.3, -2.5, 1.7), (0.25, 2.0, 95.0),
]
laguerre = [
    (3.0, 0.0, 1.5), (2.5, 1.0, 4.0), (7.5, 2.0, 10.0), (1.5, 0.0, 0.3),
    (12.0, 4.0, 22.0), (0.7, 0.7, 3.0), (5.2, 3.0, 50.0),
]
gam = [0.1, 0.5, 1.5, 3.7, 10.25, 27.5, 45.0, -0.5, -2.3, -7.9]


def f(x):
    return mp.nstr(x, 20)


def lag_i(p, n, x):
    p, n, x = mp.mpf(p), mp.mpf(n), mp.mpf(x)
    return (mp.sqrt(mp.gamma(1 + p) / mp.gamma(1 + n)) * mp.exp(-x / 2) * x ** ((p - n) / 2)
            * mp.hyp1f1(-n, p - n + 1, x) / mp.gamma(1 + p - n))


lines = ["// Generated by tests/tools/gen_special_ref.py; do not edit.", ""]
lines.append("struct KummerRef { double a, b, x, value; };")
lines.append("inline constexpr KummerRef kKummerRef[] = {")
for a, b, x in kummer:
    lines.append(f"    {{{a}, {b}, {x}, {f(mp.hyp1f1(a, b, x))}}},")
lines.append("};")
lines.append("struct LaguerreRef { double p, n, x, value; };")
lines.append("inline constexpr LaguerreRef kLaguerreRef[] = {")
for p, n, x in laguerre:
    lines.append(f"    {{{p}, {n}, {x}, {f(lag_i(p, n, x))}}},")
lines.append("};")
lines.append("struct GammaRef { double z, value; };")
lines.append("inline constexpr GammaRef kGammaRef[] = {")
for z in gam:
    lines.append(f"    {{{z}, {f(mp.gamma(z))}}},")
lines.append("};")
print("\n".join(lines))
