"""LULU smoothers and other erosion/dilation cascades as PBFs."""

from __future__ import annotations

import re

from .pbf import Pbf, Window, compose, dualize

__all__ = ["lower", "upper", "identity", "build_ced", "CedSyntaxError"]

_TOKEN = re.compile(r"([LU])(\d+)")


class CedSyntaxError(ValueError):
    pass


def identity() -> Pbf:
    return Pbf(Window(0, 0), ((0,),))


def lower(n: int) -> Pbf:
    """L_n: max over the n+1 runs of length n+1 through 0 of their min."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Pbf(Window.centered(n), tuple(tuple(range(j, j + n + 1)) for j in range(-n, 1)))


def upper(n: int) -> Pbf:
    """U_n, the dual of L_n."""
    return dualize(lower(n))


def build_ced(spec: str) -> Pbf:
    """PBF of a cascade written like ``"U2L2"``; the rightmost filter acts first."""
    text = spec.replace(" ", "")
    tokens = _TOKEN.findall(text)
    if not text or "".join(k + n for k, n in tokens) != text:
        raise CedSyntaxError(f"cannot parse cascade {spec!r}")
    result = None
    for kind, n in reversed(tokens):
        stage = lower(int(n)) if kind == "L" else upper(int(n))
        result = stage if result is None else compose(stage, result)
    return result
