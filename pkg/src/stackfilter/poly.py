# Dense integer polynomials as coefficient lists, lowest degree first.
# Coefficients are Python ints, so nothing overflows.

from __future__ import annotations

from math import comb


def normalize(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return a[:n]


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return normalize(out)


def add_into(acc, b, shift=0):
    """In-place ``acc += x**shift * b``; grows ``acc`` as needed."""
    need = len(b) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for i, c in enumerate(b):
        acc[i + shift] += c


def scale(a, k):
    return normalize([k * c for c in a])


def mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def binomial(n, sign=1):
    """Coefficients of ``(1 + sign*x)**n``."""
    return [comb(n, k) * sign**k for k in range(n + 1)]


def monomial(k, c=1):
    return [0] * k + [c]


def evaluate(a, x):
    """Horner evaluation; works for ints, Fractions and floats."""
    acc = 0 * x
    for c in reversed(a):
        acc = acc * x + c
    return acc


def derivative(a):
    return [i * c for i, c in enumerate(a)][1:]
